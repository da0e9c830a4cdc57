#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rado
{
    using Vertex = std::uint32_t;
    using VertexSet = boost::dynamic_bitset<std::uint64_t>;

    enum class PairKind
    {
        Equal,
        Edge,
        NonEdge
    };

    auto to_string(PairKind kind) -> std::string;

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string & what);

        [[nodiscard]] auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /// Finite simple graph on vertices 0..n-1. Adjacency is kept as one packed
    /// bit row per vertex so that candidate filtering in the search kernels is
    /// a handful of word operations.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t n);

        /// Throws std::invalid_argument on loops, duplicates, or out-of-range ids.
        static auto from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph;

        [[nodiscard]] auto size() const -> std::size_t { return _rows.size(); }

        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].test(v); }
        [[nodiscard]] auto kind(Vertex u, Vertex v) const -> PairKind;
        [[nodiscard]] auto row(Vertex u) const -> const VertexSet & { return _rows[u]; }

        void add_edge(Vertex u, Vertex v);
        void remove_edge(Vertex u, Vertex v);
        void set_adjacent(Vertex u, Vertex v, bool value);

        /// Appends an isolated vertex and returns its id.
        auto add_vertex() -> Vertex;

        [[nodiscard]] auto degree(Vertex u) const -> std::size_t { return _rows[u].count(); }
        [[nodiscard]] auto edge_count() const -> std::size_t;
        [[nodiscard]] auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

        /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
        [[nodiscard]] auto induced(std::span<const Vertex> vertices) const -> Graph;

        [[nodiscard]] auto full_set() const -> VertexSet;
        [[nodiscard]] auto empty_set() const -> VertexSet;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        void check_pair(Vertex u, Vertex v) const;

        std::vector<VertexSet> _rows;
    };

    /// 0..n-1 in order.
    auto all_vertices(const Graph & g) -> std::vector<Vertex>;

    auto complete_graph(std::size_t n) -> Graph;
    auto empty_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto path_graph(std::size_t n) -> Graph;

    /// Flips every pair with exactly one endpoint in `s`. Empty or full `s` is the identity.
    auto switch_graph(const Graph & g, std::span<const Vertex> s) -> Graph;
    auto complement_graph(const Graph & g) -> Graph;

    struct PaleyGraph
    {
        Graph graph;
        std::uint32_t multiplier = 0;                // least quadratic non-residue mod q
        std::vector<Vertex> complement_isomorphism;  // x -> multiplier * x mod q
    };

    [[nodiscard]] auto is_prime(std::uint64_t q) -> bool;

    /// Paley graph on Z_q for a prime q = 1 mod 4. Throws std::invalid_argument otherwise.
    auto build_paley(std::uint32_t q) -> PaleyGraph;

    struct ExtensionFailure
    {
        std::vector<Vertex> adjacent_to;      // U
        std::vector<Vertex> non_adjacent_to;  // U'

        friend auto operator==(const ExtensionFailure &, const ExtensionFailure &) -> bool = default;
    };

    /// std::nullopt means the graph has the k-extension property.
    using ExtensionResult = std::optional<ExtensionFailure>;

    /// Checks every disjoint (U, U') with |U| + |U'| <= k for an outside witness.
    /// Failing pairs are reported in the order: total size ascending, then the
    /// underlying set W = U u U' in lexicographic order, then the split of W
    /// read as a bitmask over W (bit i set means W[i] in U) ascending.
    auto check_extension(const Graph & g, unsigned k) -> ExtensionResult;

    class ExtensionBudgetExceeded : public std::runtime_error
    {
    public:
        ExtensionBudgetExceeded(Graph partial, ExtensionFailure failing);

        [[nodiscard]] auto partial() const -> const Graph & { return _partial; }
        [[nodiscard]] auto failing() const -> const ExtensionFailure & { return _failing; }

    private:
        Graph _partial;
        ExtensionFailure _failing;
    };

    struct ExtensionBuildOptions
    {
        std::size_t max_vertices = 4096;
    };

    /// Random graph followed by a repair loop that adds a witness vertex for
    /// each failing pair. Deterministic in `seed`.
    auto build_ec(unsigned k, std::uint64_t seed, const ExtensionBuildOptions & options = {}) -> Graph;

    struct Embedding
    {
        std::vector<Vertex> image;

        [[nodiscard]] auto operator[](Vertex v) const -> Vertex { return image[v]; }
        [[nodiscard]] auto size() const -> std::size_t { return image.size(); }

        friend auto operator<=>(const Embedding &, const Embedding &) = default;
    };

    [[nodiscard]] auto is_embedding(const Graph & pattern, const Graph & host, const Embedding & e) -> bool;

    /// Restrictions for the backtracking kernel. `domains[v]`, when present,
    /// limits the images of pattern vertex v. `order_preserving` requires the
    /// image to be strictly increasing (vertex ids serve as the linear order).
    struct EmbeddingConstraints
    {
        std::vector<VertexSet> domains;
        bool order_preserving = false;
    };

    /// Visits induced embeddings in lexicographic order of the image tuple.
    /// The visitor returns false to stop.
    void visit_embeddings(const Graph & pattern, const Graph & host, const EmbeddingConstraints & constraints,
        const std::function<bool(const Embedding &)> & visitor);

    auto find_embeddings(const Graph & pattern, const Graph & host, std::size_t limit,
        const EmbeddingConstraints & constraints = {}) -> std::vector<Embedding>;

    auto find_first_embedding(const Graph & pattern, const Graph & host,
        const EmbeddingConstraints & constraints = {}) -> std::optional<Embedding>;

    /// Injective map between vertices of one host whose restriction is an
    /// isomorphism of induced subgraphs. Pairs are kept in insertion order.
    struct PartialIso
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;

        [[nodiscard]] auto contains(Vertex v) const -> bool;
        [[nodiscard]] auto image_of(Vertex v) const -> std::optional<Vertex>;

        friend auto operator==(const PartialIso &, const PartialIso &) -> bool = default;
    };

    [[nodiscard]] auto is_partial_iso(const Graph & host, const PartialIso & p) -> bool;

    /// Extends p to v using the least image vertex whose adjacency to the
    /// current image matches v's adjacency to the current domain.
    auto extend_partial_iso(const Graph & host, const PartialIso & p, Vertex v) -> std::optional<PartialIso>;

    /// As above, with the new image drawn from `allowed`.
    auto extend_partial_iso(const Graph & host, const PartialIso & p, Vertex v, const VertexSet & allowed)
        -> std::optional<PartialIso>;

    /// Graph text format: "n <count>" followed by one "u v" line per edge, u < v.
    void write_graph(std::ostream & out, const Graph & g);
    auto read_graph(std::istream & in) -> Graph;
    auto graph_to_string(const Graph & g) -> std::string;
    auto load_graph(const std::string & path) -> Graph;
    void save_graph(const std::string & path, const Graph & g);

    /// 64-bit FNV-1a over the canonical text form.
    [[nodiscard]] auto fingerprint(const Graph & g) -> std::uint64_t;
    [[nodiscard]] auto fnv1a(std::string_view bytes) -> std::uint64_t;
    [[nodiscard]] auto hex64(std::uint64_t value) -> std::string;
}

#pragma once

#include <rado/canonicity.hpp>
#include <rado/structures.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace rado
{
    /// Plain and constant graphs enter as partitioned graphs (a single part,
    /// or the associated partition).
    auto as_structure(const Graph & g) -> PartitionedGraph;
    auto as_structure(const ConstantGraph & cg) -> PartitionedGraph;

    struct ArrowQuery
    {
        PartitionedGraph S;
        PartitionedGraph H;
        PartitionedGraph P;
        unsigned k = 2;
        bool ordered = false;  // embeddings must be increasing in vertex id
    };

    struct RamseyBudget
    {
        std::uint64_t max_colorings = std::uint64_t{1} << 24;
        std::uint64_t max_copies = 100000;
    };

    /// Copies of P in S are distinct image sets, sorted lexicographically as
    /// sorted vertex lists. Copies of H are listed by their least embedding,
    /// each with the indices of the P-copies inside its image.
    struct CopyTable
    {
        std::vector<std::vector<Vertex>> p_sets;
        std::vector<Embedding> p_embeddings;  // least embedding per P-copy
        std::vector<Embedding> h_embeddings;
        std::vector<std::vector<std::size_t>> h_members;

        [[nodiscard]] auto monochromatic(std::size_t h, std::span<const unsigned> coloring) const -> bool;
    };

    class RamseyBudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Throws RamseyBudgetExceeded when either copy list passes max_copies.
    auto enumerate_copies(const ArrowQuery & q, std::uint64_t max_copies = RamseyBudget{}.max_copies) -> CopyTable;

    /// Least embedding of H whose P-copies all share one colour.
    auto find_mono_copy(const CopyTable & table, std::span<const unsigned> coloring) -> std::optional<Embedding>;
    auto find_mono_copy(const ArrowQuery & q, std::span<const unsigned> coloring) -> std::optional<Embedding>;

    enum class ArrowOutcome
    {
        Holds,
        Fails,
        BudgetExceeded
    };

    auto to_string(ArrowOutcome o) -> std::string;

    struct ArrowStats
    {
        std::uint64_t p_copies = 0;
        std::uint64_t h_copies = 0;
        std::uint64_t colorings_examined = 0;
        std::optional<std::uint64_t> colorings_total;  // absent when it overflows 64 bits
        bool vacuous = false;                          // P does not embed in H
        bool copy_budget_hit = false;
    };

    struct ArrowVerdict
    {
        ArrowOutcome outcome = ArrowOutcome::Holds;
        std::optional<std::vector<unsigned>> witness;  // least failing colouring
        ArrowStats stats;
        CopyTable table;
    };

    struct ArrowOptions
    {
        RamseyBudget budget;
        bool fix_first_color = true;
        unsigned threads = 1;
    };

    /// Colourings are enumerated in lexicographic order over the P-copy list,
    /// copy 0 most significant. With fix_first_color the first copy is
    /// coloured 0. Parallel workers split the index range; the least failing
    /// index wins.
    auto verify_arrow(const ArrowQuery & q, const ArrowOptions & options = {}) -> ArrowVerdict;

    /// Symmetric matrix of colours on vertex pairs; -1 marks pairs left uncoloured.
    using PairColoring = std::vector<std::vector<int>>;

    /// Least copy of pattern in host whose edges carry one chi_e colour and
    /// whose non-edges carry one chi_n colour.
    auto find_edge_nonedge_mono_copy(const Graph & host, const Graph & pattern, const PairColoring & chi_e,
        const PairColoring & chi_n) -> std::optional<Embedding>;

    /// Colours every source pair by pair_color, split by the pair's kind.
    /// Needs dom(f) to cover the source graph.
    auto induced_pair_coloring(const FunctionGadget & f) -> std::pair<PairColoring, PairColoring>;
}

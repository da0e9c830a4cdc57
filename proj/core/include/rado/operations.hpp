#pragma once

#include <rado/graph.hpp>
#include <rado/relations.hpp>

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rado
{
    enum class GadgetKind
    {
        Identity,
        Minus,
        EE,
        EN,
        Constant,
        Switch,
        Custom
    };

    auto to_string(GadgetKind kind) -> std::string;
    auto parse_gadget_kind(std::string_view name) -> GadgetKind;

    enum class PairColor
    {
        Collapsed,
        Edge,
        NonEdge
    };

    auto to_string(PairColor color) -> std::string;

    class GadgetError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    using GraphPtr = std::shared_ptr<const Graph>;

    /// A finite map from a vertex subset of one graph into another graph.
    /// Labelled gadgets are checked against their defining property on
    /// construction and cannot exist otherwise.
    class FunctionGadget
    {
    public:
        /// `map[v]` is read only for v in `dom`. Throws GadgetError when the
        /// label's defining property fails.
        FunctionGadget(GraphPtr src, GraphPtr dst, std::vector<Vertex> dom, std::vector<Vertex> map, GadgetKind label,
            std::vector<Vertex> switch_set = {});

        [[nodiscard]] auto src() const -> const Graph & { return *_src; }
        [[nodiscard]] auto dst() const -> const Graph & { return *_dst; }
        [[nodiscard]] auto src_ptr() const -> const GraphPtr & { return _src; }
        [[nodiscard]] auto dst_ptr() const -> const GraphPtr & { return _dst; }
        [[nodiscard]] auto dom() const -> const std::vector<Vertex> & { return _dom; }
        [[nodiscard]] auto label() const -> GadgetKind { return _label; }
        [[nodiscard]] auto switch_set() const -> const std::vector<Vertex> & { return _switch_set; }

        [[nodiscard]] auto in_dom(Vertex v) const -> bool { return v < _in_dom.size() && _in_dom.test(v); }

        /// Throws std::out_of_range outside the domain.
        [[nodiscard]] auto operator()(Vertex v) const -> Vertex;

        /// Image indexed by src vertex; entries outside dom are unspecified.
        [[nodiscard]] auto raw_map() const -> const std::vector<Vertex> & { return _map; }

        [[nodiscard]] auto covers_src() const -> bool { return _dom.size() == _src->size(); }

        [[nodiscard]] auto relabelled(GadgetKind label) const -> FunctionGadget;

    private:
        void verify() const;

        GraphPtr _src;
        GraphPtr _dst;
        std::vector<Vertex> _dom;
        VertexSet _in_dom;
        std::vector<Vertex> _map;
        GadgetKind _label;
        std::vector<Vertex> _switch_set;
    };

    auto make_identity(GraphPtr src, std::optional<std::vector<Vertex>> dom = std::nullopt) -> FunctionGadget;

    /// Maps dom onto the least clique of size |dom| in dst, in order.
    auto make_ee(GraphPtr src, GraphPtr dst, std::optional<std::vector<Vertex>> dom = std::nullopt) -> FunctionGadget;

    /// Maps dom onto the least independent set of size |dom| in dst, in order.
    auto make_en(GraphPtr src, GraphPtr dst, std::optional<std::vector<Vertex>> dom = std::nullopt) -> FunctionGadget;

    /// Identity vertex map into the complement graph.
    auto make_minus(GraphPtr src, std::optional<std::vector<Vertex>> dom = std::nullopt) -> FunctionGadget;

    /// src is self-complementary via `witness`; the gadget is that permutation.
    auto make_minus_by_witness(GraphPtr src, std::vector<Vertex> witness) -> FunctionGadget;

    auto make_constant(GraphPtr src, GraphPtr dst, Vertex target, std::optional<std::vector<Vertex>> dom = std::nullopt)
        -> FunctionGadget;

    /// Identity vertex map into switch_graph(src, s); s must be nonempty.
    auto make_switch(GraphPtr src, std::vector<Vertex> s, std::optional<std::vector<Vertex>> dom = std::nullopt) -> FunctionGadget;

    auto make_custom(GraphPtr src, GraphPtr dst, std::vector<std::pair<Vertex, Vertex>> pairs) -> FunctionGadget;

    struct NamedParams
    {
        GraphPtr dst;                             // eE, eN, const
        std::optional<std::vector<Vertex>> dom;
        std::optional<std::vector<Vertex>> witness;  // minus on a self-complementary src
        std::optional<Vertex> target;             // const
        std::vector<Vertex> switch_set;           // switch
    };

    auto make_named(GadgetKind kind, GraphPtr src, const NamedParams & params) -> FunctionGadget;

    /// outer after inner: dom = dom(inner), label Custom.
    auto compose(const FunctionGadget & outer, const FunctionGadget & inner) -> FunctionGadget;

    auto pair_color(const FunctionGadget & f, Vertex x, Vertex y) -> PairColor;

    auto violates(const FunctionGadget & f, const Relation & r) -> PreservationResult;

    /// Gadget text format:
    ///   src <graph file>
    ///   dst <graph file>
    ///   label <kind>          (optional, default custom)
    ///   switch: v1 v2 ...     (switch gadgets only)
    ///   u -> v                (one per domain vertex)
    /// Relative paths resolve against `base_dir`.
    auto read_gadget(std::istream & in, const std::string & base_dir) -> FunctionGadget;
    auto load_gadget(const std::string & path) -> FunctionGadget;
    void write_gadget(std::ostream & out, const FunctionGadget & f, const std::string & src_path, const std::string & dst_path);
}

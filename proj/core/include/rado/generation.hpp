#pragma once

#include <rado/operations.hpp>
#include <rado/relations.hpp>
#include <rado/structures.hpp>

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rado
{
    class GenerationError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Named kinds are instantiated on demand on the search hosts. With
    /// automorphism_free, each gadget may be preceded by any repositioning
    /// that preserves pair kinds.
    struct GeneratorSet
    {
        std::vector<GadgetKind> named{GadgetKind::Identity};
        std::vector<FunctionGadget> custom;
        bool automorphism_free = true;
    };

    struct InterpolationStep
    {
        std::map<Vertex, Vertex> reposition;  // current points -> gadget source
        FunctionGadget gadget;
    };

    /// Points of `window` in `source` travel through each step: a
    /// kind-preserving reposition into the gadget's domain, then the gadget.
    /// `finish`, when present, carries the final points into the target's
    /// graph.
    struct InterpolationWitness
    {
        GraphPtr source;
        std::vector<Vertex> window;
        std::vector<InterpolationStep> steps;
        std::optional<std::map<Vertex, Vertex>> finish;
        std::vector<std::string> transcript;
    };

    struct WitnessCheck
    {
        bool ok = false;
        std::string reason;
        std::vector<Vertex> images;  // final point of each window entry
        GraphPtr final_graph;
    };

    /// Replays the steps pointwise and checks every reposition.
    auto replay_witness(const InterpolationWitness & w) -> WitnessCheck;

    /// Replay, then check finish(composite(x)) = target(x) on dom(target) and
    /// that finish is kind-preserving.
    auto verify_witness(const InterpolationWitness & w, const FunctionGadget & target) -> WitnessCheck;

    struct InterpolateOptions
    {
        std::size_t max_embeddings_per_step = 1000;
        std::size_t max_states = 200000;
    };

    /// Breadth-first over generator applications, shortest witness first,
    /// ties broken by generator order (named, then custom), host order, and
    /// embedding order. std::nullopt only says nothing was found within depth.
    auto interpolate(const FunctionGadget & target, const GeneratorSet & gens, unsigned depth,
        const std::vector<GraphPtr> & hosts, const InterpolateOptions & options = {}) -> std::optional<InterpolationWitness>;

    /// F has two adjacent constants. Maps the least copy of F in host onto
    /// the least copy of F without the constant edge. Throws GenerationError
    /// naming the pattern that has no copy.
    auto delete_edge_step(const ConstantGraph & F, const GraphPtr & host) -> FunctionGadget;

    /// Deletes the edges among `window` one at a time, least pair first.
    auto delete_all_edges(const GraphPtr & host, std::vector<Vertex> window) -> InterpolationWitness;

    /// g collapses an edge and h a non-edge, both as maps on host. Each step
    /// merges the least pair of distinct current points, so the witness has
    /// at most |F| - 1 steps.
    auto collapse_all(std::vector<Vertex> F, const GraphPtr & host, const FunctionGadget & g, const FunctionGadget & h)
        -> InterpolationWitness;

    enum class ReductClass
    {
        GraphClass,
        MinusClass,
        SwitchClass,
        MinusSwitchClass,
        EqualityClass
    };

    auto to_string(ReductClass c) -> std::string;

    struct SwitchCertificate
    {
        std::optional<Vertex> vertex;  // first vertex whose switch breaks the relation
        InvarianceResult result;
        std::size_t vertices_checked = 0;
    };

    struct RelationCertificates
    {
        std::string name;
        std::optional<std::pair<Tuple, Tuple>> equality;  // same pattern, different membership
        InvarianceResult complement;
        SwitchCertificate switching;
    };

    struct ReductVerdict
    {
        ReductClass cls = ReductClass::GraphClass;
        bool equality_definable = false;
        bool complement_invariant = false;
        bool switch_invariant = false;
        std::vector<RelationCertificates> certificates;
    };

    /// Needs check_extension(host, k) to pass and host at least as large as
    /// every arity.
    auto classify_reduct(std::span<const Relation> relations, const Graph & host, unsigned k) -> ReductVerdict;
    auto classify_reduct(const Relation & relation, const Graph & host, unsigned k) -> ReductVerdict;

    /// Local action of a generator on the pattern induced by an n-point window.
    enum class OrbitGenerator
    {
        Identity,
        Minus,
        Switch,
        ToClique,
        ToIndependent,
        ToPoint,
        DeleteEdge,
        AddEdge
    };

    inline constexpr std::array all_orbit_generators{OrbitGenerator::Identity, OrbitGenerator::Minus,
        OrbitGenerator::Switch, OrbitGenerator::ToClique, OrbitGenerator::ToIndependent, OrbitGenerator::ToPoint,
        OrbitGenerator::DeleteEdge, OrbitGenerator::AddEdge};

    auto to_string(OrbitGenerator g) -> std::string;
    auto parse_orbit_generator(std::string_view name) -> OrbitGenerator;

    /// eE, eN and const act as ToClique, ToIndependent and ToPoint.
    auto orbit_generator_of(GadgetKind kind) -> std::optional<OrbitGenerator>;

    inline constexpr std::size_t max_orbit_size = 5;

    /// Least relabelling by the upper-triangle adjacency bits, read row by row.
    auto canonical_form(const Graph & g) -> Graph;

    /// Canonical representatives of every isomorphism type on n vertices.
    auto graph_types(std::size_t n) -> const std::vector<Graph> &;

    /// Types sorted by vertex count, then edge count, then canonical bits.
    auto type_less(const Graph & a, const Graph & b) -> bool;

    /// Successors of g under one generator, as canonical forms.
    auto apply_generator(OrbitGenerator gen, const Graph & g) -> std::vector<Graph>;

    /// Least fixed point containing start. Throws std::invalid_argument past
    /// max_orbit_size vertices.
    auto orbit_closure(const Graph & start, std::span<const OrbitGenerator> gens) -> std::vector<Graph>;
}

#pragma once

#include <rado/operations.hpp>
#include <rado/structures.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rado
{
    enum class BehaviorClass : std::uint8_t
    {
        Identity,
        Minus,
        EE,
        EN,
        Constant
    };

    inline constexpr std::array all_behavior_classes{
        BehaviorClass::Identity, BehaviorClass::Minus, BehaviorClass::EE, BehaviorClass::EN, BehaviorClass::Constant};

    auto to_string(BehaviorClass c) -> std::string;

    /// Colour a class assigns to a source pair of the given kind.
    auto expected_color(BehaviorClass c, PairKind kind) -> PairColor;

    /// Class of a labelled gadget, when it has one (identity, minus, eE, eN, const).
    auto behavior_of(GadgetKind kind) -> std::optional<BehaviorClass>;

    /// Set of behaviour classes consistent with some evidence.
    class ClassSet
    {
    public:
        constexpr ClassSet() = default;

        static constexpr auto all() -> ClassSet { return ClassSet(0x1f); }
        static constexpr auto none() -> ClassSet { return ClassSet(0); }
        static constexpr auto of(BehaviorClass c) -> ClassSet { return ClassSet(static_cast<std::uint8_t>(1u << static_cast<unsigned>(c))); }

        [[nodiscard]] constexpr auto contains(BehaviorClass c) const -> bool { return _bits & of(c)._bits; }
        [[nodiscard]] constexpr auto size() const -> unsigned { return static_cast<unsigned>(__builtin_popcount(_bits)); }
        [[nodiscard]] constexpr auto empty() const -> bool { return _bits == 0; }
        [[nodiscard]] auto single() const -> std::optional<BehaviorClass>;
        [[nodiscard]] auto classes() const -> std::vector<BehaviorClass>;

        /// Keeps the classes that send a pair of `kind` to `color`.
        void restrict_to(PairKind kind, PairColor color);

        [[nodiscard]] constexpr auto operator&(ClassSet o) const -> ClassSet { return ClassSet(_bits & o._bits); }
        [[nodiscard]] constexpr auto subset_of(ClassSet o) const -> bool { return (_bits & ~o._bits) == 0; }

        friend constexpr auto operator==(ClassSet, ClassSet) -> bool = default;

    private:
        constexpr explicit ClassSet(std::uint8_t bits) :
            _bits(bits)
        {
        }

        std::uint8_t _bits = 0x1f;
    };

    auto to_string(ClassSet s) -> std::string;

    /// Classes consistent with every pair inside s. Throws std::invalid_argument
    /// when |s| < 2 or s leaves the domain.
    auto classify_on_set(const FunctionGadget & f, std::span<const Vertex> s) -> ClassSet;

    /// Classes consistent with every pair across s1 x s2. The sets must be
    /// nonempty, disjoint, and inside the domain.
    auto is_canonical_between(const FunctionGadget & f, std::span<const Vertex> s1, std::span<const Vertex> s2) -> ClassSet;

    /// Pairs of s whose colours contradict each other: the first pair of each
    /// kind and the first later pair of that kind with another colour.
    struct Conflict
    {
        std::pair<Vertex, Vertex> first;
        std::pair<Vertex, Vertex> second;
        PairKind kind;
    };

    auto find_conflicts(const FunctionGadget & f, std::span<const Vertex> s) -> std::vector<Conflict>;

    enum class EntryStatus
    {
        Determined,
        Undetermined,
        NonCanonical
    };

    struct ProfileEntry
    {
        ClassSet consistent;

        [[nodiscard]] auto status() const -> EntryStatus;
        [[nodiscard]] auto label() const -> std::string;  // class name, "Undetermined", or "NonCanonical"
    };

    /// Symmetric matrix over the parts of a partitioned graph: diagonal entries
    /// describe behaviour on a part, off-diagonal entries between two parts.
    /// A part with fewer than two vertices (or an empty partner) gives no
    /// evidence and stays Undetermined.
    struct BehaviorProfile
    {
        std::vector<std::vector<Vertex>> parts;
        std::vector<std::vector<ProfileEntry>> entries;

        [[nodiscard]] auto diag(std::size_t i) const -> const ProfileEntry & { return entries[i][i]; }
        [[nodiscard]] auto between(std::size_t i, std::size_t j) const -> const ProfileEntry & { return entries[i][j]; }
        [[nodiscard]] auto canonical() const -> bool;
    };

    auto profile_partitioned(const FunctionGadget & f, const PartitionedGraph & pg) -> BehaviorProfile;

    /// Profile over the parts of a vertex partition of f's source graph.
    auto profile_parts(const FunctionGadget & f, const std::vector<std::vector<Vertex>> & parts) -> BehaviorProfile;

    auto is_canonical_constant_graph(const FunctionGadget & f, const ConstantGraph & cg) -> BehaviorProfile;

    using CanonicalPattern = std::variant<Graph, PartitionedGraph, ConstantGraph>;

    /// Host structure living on f's source graph, matching the pattern's kind.
    using CanonicalHost = std::variant<std::monostate, PartitionedGraph, ConstantGraph>;

    /// Least embedding of the pattern into f's source graph (inside dom(f), and
    /// respecting the host's parts or constants when given) on whose image f
    /// has no NonCanonical profile entry. At most `limit` candidate embeddings
    /// are examined.
    auto find_canonical_copy(const FunctionGadget & f, const CanonicalPattern & pattern, const CanonicalHost & host,
        std::size_t limit) -> std::optional<Embedding>;

    /// Profile of f on the image of a pattern under e.
    auto profile_on_copy(const FunctionGadget & f, const CanonicalPattern & pattern, const Embedding & e) -> BehaviorProfile;
}

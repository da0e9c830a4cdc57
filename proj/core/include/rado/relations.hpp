#pragma once

#include <rado/graph.hpp>

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rado
{
    using Tuple = std::vector<Vertex>;

    /// Quantifier-free formula over E(x_i, x_j) and x_i = x_j, variables are
    /// tuple positions.
    struct Formula
    {
        enum class Op
        {
            True,
            False,
            Edge,
            Equal,
            Not,
            And,
            Or
        };

        Op op = Op::True;
        unsigned lhs = 0;
        unsigned rhs = 0;
        std::vector<Formula> children;

        [[nodiscard]] auto evaluate(std::span<const Vertex> t, const Graph & g) const -> bool;
        [[nodiscard]] auto max_variable() const -> std::optional<unsigned>;
        [[nodiscard]] auto to_string() const -> std::string;
    };

    class SpecError : public std::runtime_error
    {
    public:
        SpecError(std::size_t position, const std::string & what);

        [[nodiscard]] auto position() const -> std::size_t { return _position; }

    private:
        std::size_t _position;
    };

    /// Grammar:
    ///   expr  := conj ('|' conj)*
    ///   conj  := unary ('&' unary)*
    ///   unary := '!' unary | '(' expr ')' | atom
    ///   atom  := 'E(' var ',' var ')' | 'N(' var ',' var ')' | var '=' var | var '!=' var | 'true' | 'false'
    ///   var   := ['x'] digits
    /// N(a,b) abbreviates !E(a,b) & a != b.
    auto parse_formula(std::string_view text) -> Formula;

    struct ParitySpec
    {
        unsigned k = 0;
    };

    struct TupleSetSpec
    {
        std::set<Tuple> tuples;
    };

    struct FormulaSpec
    {
        Formula formula;
    };

    class Relation
    {
    public:
        using Spec = std::variant<ParitySpec, TupleSetSpec, FormulaSpec>;

        Relation(unsigned arity, Spec spec, std::string name);

        /// R^(k): pairwise distinct entries spanning an odd number of edges.
        static auto parity(unsigned k) -> Relation;
        static auto tuple_set(unsigned arity, std::set<Tuple> tuples, std::string name = "tuples") -> Relation;
        /// Arity defaults to one more than the largest variable index.
        static auto formula(std::string_view text, std::optional<unsigned> arity = std::nullopt) -> Relation;
        static auto edge() -> Relation;
        static auto non_edge() -> Relation;
        static auto pairwise_distinct(unsigned arity) -> Relation;

        [[nodiscard]] auto arity() const -> unsigned { return _arity; }
        [[nodiscard]] auto spec() const -> const Spec & { return _spec; }
        [[nodiscard]] auto name() const -> const std::string & { return _name; }

        /// Membership needs pairwise distinct entries and is invariant under
        /// permuting them; enumeration can then run over sorted combinations.
        [[nodiscard]] auto symmetric_injective() const -> bool;

        /// Membership depends only on the induced subgraph and equality
        /// pattern of the tuple (false for explicit tuple sets).
        [[nodiscard]] auto local() const -> bool;

    private:
        unsigned _arity;
        Spec _spec;
        std::string _name;
    };

    /// CLI spec language: "parity:K", "tuples:@file", "formula:TEXT",
    /// "formula[N]:TEXT" (explicit arity), "distinct:K", "edge", "nonedge".
    auto parse_relation_spec(std::string_view spec) -> Relation;

    /// Throws std::invalid_argument on arity mismatch or out-of-range entries.
    auto eval(const Relation & r, std::span<const Vertex> t, const Graph & g) -> bool;

    struct PreservationResult
    {
        std::optional<Tuple> violation;  // least t in r(src) with f(t) not in r(dst)

        [[nodiscard]] auto preserved() const -> bool { return ! violation; }
    };

    /// `map[v]` is the image of src vertex v; only tuples over `domain`
    /// (sorted ascending) are inspected.
    auto preserved_by_map(const Relation & r, std::span<const Vertex> map, const Graph & src, const Graph & dst,
        std::span<const Vertex> domain) -> PreservationResult;
    auto preserved_by_map(const Relation & r, std::span<const Vertex> map, const Graph & src, const Graph & dst)
        -> PreservationResult;

    struct InvarianceResult
    {
        std::optional<Tuple> violation;
        bool forward = true;  // violation lies in r(g) but not in r(rewritten g), else the reverse

        [[nodiscard]] auto preserved() const -> bool { return ! violation; }
    };

    /// Identity vertex map between g and its complement, both directions.
    auto invariant_under_complement(const Relation & r, const Graph & g) -> InvarianceResult;

    /// Identity vertex map between g and switch_graph(g, {v}), both directions.
    auto invariant_under_switch(const Relation & r, const Graph & g, Vertex v) -> InvarianceResult;

    /// std::nullopt means membership depends only on the equality pattern;
    /// otherwise two tuples with the same pattern and different membership.
    auto definable_from_equality(const Relation & r, const Graph & g) -> std::optional<std::pair<Tuple, Tuple>>;

    /// Restricted growth labelling of the positions of t.
    auto equality_pattern(std::span<const Vertex> t) -> std::vector<unsigned>;
}

#include <rado/relations.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace rado
{
    Relation::Relation(unsigned arity, Spec spec, std::string name) :
        _arity(arity),
        _spec(std::move(spec)),
        _name(std::move(name))
    {
        if (auto * ts = std::get_if<TupleSetSpec>(&_spec))
            for (const auto & t : ts->tuples)
                if (t.size() != _arity)
                    throw std::invalid_argument("tuple of length " + std::to_string(t.size()) + " in a relation of arity " +
                        std::to_string(_arity));
        if (auto * fs = std::get_if<FormulaSpec>(&_spec))
            if (auto m = fs->formula.max_variable(); m && *m >= _arity)
                throw std::invalid_argument("formula mentions x" + std::to_string(*m) + " beyond arity " + std::to_string(_arity));
    }

    auto Relation::parity(unsigned k) -> Relation
    {
        if (k < 1)
            throw std::invalid_argument("parity relation needs k >= 1");
        return Relation(k, ParitySpec{k}, "R(" + std::to_string(k) + ")");
    }

    auto Relation::tuple_set(unsigned arity, std::set<Tuple> tuples, std::string name) -> Relation
    {
        return Relation(arity, TupleSetSpec{std::move(tuples)}, std::move(name));
    }

    auto Relation::formula(std::string_view text, std::optional<unsigned> arity) -> Relation
    {
        auto f = parse_formula(text);
        const auto m = f.max_variable();
        const unsigned a = arity.value_or(m ? *m + 1 : 0);
        return Relation(a, FormulaSpec{std::move(f)}, std::string(text));
    }

    auto Relation::edge() -> Relation { return formula("E(x0,x1)"); }

    auto Relation::non_edge() -> Relation { return formula("N(x0,x1)"); }

    auto Relation::pairwise_distinct(unsigned arity) -> Relation
    {
        std::string text;
        for (unsigned i = 0; i < arity; ++i)
            for (unsigned j = i + 1; j < arity; ++j)
                text += (text.empty() ? "" : " & ") + ("x" + std::to_string(i)) + "!=x" + std::to_string(j);
        if (text.empty())
            text = "true";
        return Relation(arity, FormulaSpec{parse_formula(text)}, "distinct(" + std::to_string(arity) + ")");
    }

    auto Relation::symmetric_injective() const -> bool { return std::holds_alternative<ParitySpec>(_spec); }

    auto Relation::local() const -> bool { return ! std::holds_alternative<TupleSetSpec>(_spec); }

    auto parse_relation_spec(std::string_view spec) -> Relation
    {
        const auto colon = spec.find(':');
        const auto head = spec.substr(0, colon);
        const auto body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
        const auto body_pos = colon == std::string_view::npos ? spec.size() : colon + 1;

        auto parse_count = [&](std::string_view digits, std::size_t pos) -> unsigned {
            if (digits.empty() || digits.size() > 4 || ! std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw SpecError(pos, "expected a positive integer");
            return static_cast<unsigned>(std::stoul(std::string(digits)));
        };

        if (head == "edge" && colon == std::string_view::npos)
            return Relation::edge();
        if (head == "nonedge" && colon == std::string_view::npos)
            return Relation::non_edge();
        if (head == "parity") {
            const auto k = parse_count(body, body_pos);
            if (k < 1)
                throw SpecError(body_pos, "parity needs k >= 1");
            return Relation::parity(k);
        }
        if (head == "distinct")
            return Relation::pairwise_distinct(parse_count(body, body_pos));
        if (head == "formula" || head.starts_with("formula[")) {
            std::optional<unsigned> arity;
            if (head != "formula") {
                if (! head.ends_with("]"))
                    throw SpecError(head.size(), "expected ']'");
                arity = parse_count(head.substr(8, head.size() - 9), 8);
            }
            try {
                auto r = Relation::formula(body, arity);
                return r;
            }
            catch (const SpecError & e) {
                throw SpecError(body_pos + e.position(), std::string(e.what()));
            }
            catch (const std::invalid_argument & e) {
                throw SpecError(body_pos, e.what());
            }
        }
        if (head == "tuples") {
            if (! body.starts_with("@"))
                throw SpecError(body_pos, "expected '@file'");
            const std::string path(body.substr(1));
            std::ifstream in(path);
            if (! in)
                throw SpecError(body_pos + 1, "cannot open " + path);
            std::set<Tuple> tuples;
            std::optional<unsigned> arity;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#')
                    continue;
                std::istringstream fields(line);
                Tuple t;
                long long v;
                while (fields >> v) {
                    if (v < 0)
                        throw SpecError(body_pos, "negative vertex id in " + path);
                    t.push_back(static_cast<Vertex>(v));
                }
                if (! fields.eof())
                    throw SpecError(body_pos, "non-numeric entry in " + path);
                if (arity && *arity != t.size())
                    throw SpecError(body_pos, "tuples of different lengths in " + path);
                arity = static_cast<unsigned>(t.size());
                tuples.insert(std::move(t));
            }
            return Relation::tuple_set(arity.value_or(0), std::move(tuples), "tuples:" + path);
        }
        throw SpecError(0, "unknown relation kind '" + std::string(head) + "'");
    }

    namespace
    {
        auto parity_member(std::span<const Vertex> t, const Graph & g) -> bool
        {
            unsigned edges = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j) {
                    if (t[i] == t[j])
                        return false;
                    edges += g.adjacent(t[i], t[j]);
                }
            return edges % 2 == 1;
        }

        auto member(const Relation & r, std::span<const Vertex> t, const Graph & g) -> bool
        {
            return std::visit(
                [&](const auto & spec) -> bool {
                    using S = std::decay_t<decltype(spec)>;
                    if constexpr (std::is_same_v<S, ParitySpec>)
                        return parity_member(t, g);
                    else if constexpr (std::is_same_v<S, TupleSetSpec>)
                        return spec.tuples.contains(Tuple(t.begin(), t.end()));
                    else
                        return spec.formula.evaluate(t, g);
                },
                r.spec());
        }

        // Lexicographic enumeration of domain^arity; visitor returns false to stop.
        template <typename Visitor>
        auto for_each_tuple(std::span<const Vertex> domain, unsigned arity, Visitor && visit) -> bool
        {
            Tuple t(arity);
            if (arity == 0)
                return visit(t);
            if (domain.empty())
                return true;
            std::vector<std::size_t> idx(arity, 0);
            for (unsigned i = 0; i < arity; ++i)
                t[i] = domain[0];
            while (true) {
                if (! visit(t))
                    return false;
                int i = static_cast<int>(arity) - 1;
                while (i >= 0 && idx[i] + 1 == domain.size()) {
                    idx[i] = 0;
                    t[i] = domain[0];
                    --i;
                }
                if (i < 0)
                    return true;
                t[i] = domain[++idx[i]];
            }
        }

        // Sorted size-k subsets of domain (sorted ascending) in lexicographic order.
        template <typename Visitor>
        auto for_each_combination(std::span<const Vertex> domain, unsigned k, Visitor && visit) -> bool
        {
            const auto n = domain.size();
            Tuple t(k);
            if (k > n)
                return true;
            std::vector<std::size_t> idx(k);
            for (unsigned i = 0; i < k; ++i)
                idx[i] = i;
            while (true) {
                for (unsigned i = 0; i < k; ++i)
                    t[i] = domain[idx[i]];
                if (! visit(t))
                    return false;
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == n - k + i - 1)
                    --i;
                if (i == 0)
                    return true;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }


        // Candidate tuples for r over domain, lexicographic. For symmetric
        // injective relations only sorted combinations can be least witnesses.
        template <typename Visitor>
        auto for_each_candidate(const Relation & r, std::span<const Vertex> domain, Visitor && visit) -> bool
        {
            if (r.symmetric_injective())
                return for_each_combination(domain, r.arity(), visit);
            return for_each_tuple(domain, r.arity(), visit);
        }

        // Least t in r(g) \ r(h) under the identity vertex map, optionally
        // restricted to tuples through `through`.
        auto identity_violation(const Relation & r, const Graph & g, const Graph & h, std::span<const Vertex> domain,
            std::optional<Vertex> through) -> std::optional<Tuple>
        {
            std::optional<Tuple> result;
            auto check = [&](const Tuple & t) {
                if (member(r, t, g) && ! member(r, t, h)) {
                    result = t;
                    return false;
                }
                return true;
            };

            if (through && r.symmetric_injective()) {
                if (r.arity() == 0)
                    return result;
                // inserting v into lexicographically ordered combinations of the
                // remaining vertices keeps them in lexicographic order
                std::vector<Vertex> others;
                for (auto u : domain)
                    if (u != *through)
                        others.push_back(u);
                Tuple with_v;
                for_each_combination(others, r.arity() - 1, [&](const Tuple & t) {
                    with_v.assign(t.begin(), t.end());
                    with_v.insert(std::upper_bound(with_v.begin(), with_v.end(), *through), *through);
                    return check(with_v);
                });
                return result;
            }

            for_each_candidate(r, domain, [&](const Tuple & t) {
                if (through && std::find(t.begin(), t.end(), *through) == t.end())
                    return true;
                return check(t);
            });
            return result;
        }
    }

    auto eval(const Relation & r, std::span<const Vertex> t, const Graph & g) -> bool
    {
        if (t.size() != r.arity())
            throw std::invalid_argument("tuple of length " + std::to_string(t.size()) + " for relation of arity " +
                std::to_string(r.arity()));
        for (auto v : t)
            if (v >= g.size())
                throw std::invalid_argument("tuple entry " + std::to_string(v) + " is not a vertex");
        return member(r, t, g);
    }

    auto preserved_by_map(const Relation & r, std::span<const Vertex> map, const Graph & src, const Graph & dst,
        std::span<const Vertex> domain) -> PreservationResult
    {
        if (! std::is_sorted(domain.begin(), domain.end()))
            throw std::invalid_argument("domain must be sorted");
        for (auto v : domain)
            if (v >= map.size() || map[v] >= dst.size())
                throw std::invalid_argument("map undefined or out of range at " + std::to_string(v));

        PreservationResult result;
        Tuple image(r.arity());
        for_each_candidate(r, domain, [&](const Tuple & t) {
            if (! member(r, t, src))
                return true;
            for (std::size_t i = 0; i < t.size(); ++i)
                image[i] = map[t[i]];
            if (! member(r, image, dst)) {
                result.violation = t;
                return false;
            }
            return true;
        });
        return result;
    }

    auto preserved_by_map(const Relation & r, std::span<const Vertex> map, const Graph & src, const Graph & dst)
        -> PreservationResult
    {
        const auto domain = all_vertices(src);
        return preserved_by_map(r, map, src, dst, domain);
    }

    auto invariant_under_complement(const Relation & r, const Graph & g) -> InvarianceResult
    {
        const auto h = complement_graph(g);
        const auto identity = all_vertices(g);
        if (auto forward = preserved_by_map(r, identity, g, h); ! forward.preserved())
            return InvarianceResult{forward.violation, true};
        if (auto reverse = preserved_by_map(r, identity, h, g); ! reverse.preserved())
            return InvarianceResult{reverse.violation, false};
        return {};
    }

    auto invariant_under_switch(const Relation & r, const Graph & g, Vertex v) -> InvarianceResult
    {
        if (v >= g.size())
            throw std::out_of_range("switch vertex out of range");
        const std::vector<Vertex> s{v};
        const auto h = switch_graph(g, s);
        const auto domain = all_vertices(g);
        // tuples avoiding v induce the same structure in g and h
        if (auto forward = identity_violation(r, g, h, domain, v))
            return InvarianceResult{forward, true};
        if (auto reverse = identity_violation(r, h, g, domain, v))
            return InvarianceResult{reverse, false};
        return {};
    }

    auto equality_pattern(std::span<const Vertex> t) -> std::vector<unsigned>
    {
        std::vector<unsigned> labels(t.size());
        std::map<Vertex, unsigned> seen;
        for (std::size_t i = 0; i < t.size(); ++i) {
            auto [it, fresh] = seen.emplace(t[i], static_cast<unsigned>(seen.size()));
            labels[i] = it->second;
        }
        return labels;
    }

    auto definable_from_equality(const Relation & r, const Graph & g) -> std::optional<std::pair<Tuple, Tuple>>
    {
        std::map<std::vector<unsigned>, std::pair<Tuple, bool>> first_seen;
        std::optional<std::pair<Tuple, Tuple>> witness;
        const auto domain = all_vertices(g);
        for_each_tuple(domain, r.arity(), [&](const Tuple & t) {
            const bool in_r = member(r, t, g);
            auto [it, fresh] = first_seen.try_emplace(equality_pattern(t), t, in_r);
            if (! fresh && it->second.second != in_r) {
                witness.emplace(it->second.first, t);
                return false;
            }
            return true;
        });
        return witness;
    }
}

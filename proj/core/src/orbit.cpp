#include <rado/generation.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace rado
{
    auto to_string(OrbitGenerator g) -> std::string
    {
        switch (g) {
        case OrbitGenerator::Identity: return "identity";
        case OrbitGenerator::Minus: return "minus";
        case OrbitGenerator::Switch: return "switch";
        case OrbitGenerator::ToClique: return "clique";
        case OrbitGenerator::ToIndependent: return "independent";
        case OrbitGenerator::ToPoint: return "point";
        case OrbitGenerator::DeleteEdge: return "delete-edge";
        case OrbitGenerator::AddEdge: return "add-edge";
        }
        return "?";
    }

    auto parse_orbit_generator(std::string_view name) -> OrbitGenerator
    {
        for (auto g : all_orbit_generators)
            if (to_string(g) == name)
                return g;
        throw std::invalid_argument("unknown orbit generator '" + std::string(name) + "'");
    }

    auto orbit_generator_of(GadgetKind kind) -> std::optional<OrbitGenerator>
    {
        switch (kind) {
        case GadgetKind::Identity: return OrbitGenerator::Identity;
        case GadgetKind::Minus: return OrbitGenerator::Minus;
        case GadgetKind::Switch: return OrbitGenerator::Switch;
        case GadgetKind::EE: return OrbitGenerator::ToClique;
        case GadgetKind::EN: return OrbitGenerator::ToIndependent;
        case GadgetKind::Constant: return OrbitGenerator::ToPoint;
        case GadgetKind::Custom: return std::nullopt;
        }
        return std::nullopt;
    }

    namespace
    {
        // upper-triangle bits under a relabelling, pair (0,1) most significant
        auto code_of(const Graph & g, const std::vector<Vertex> & perm) -> std::uint64_t
        {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j)
                    code = code << 1 | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
            return code;
        }

        auto code_of(const Graph & g) -> std::uint64_t
        {
            return code_of(g, all_vertices(g));
        }
    }

    auto canonical_form(const Graph & g) -> Graph
    {
        if (g.size() > 8)
            throw std::invalid_argument("canonical form is brute force and capped at 8 vertices");
        auto perm = all_vertices(g);
        auto best = perm;
        auto best_code = code_of(g, perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            const auto c = code_of(g, perm);
            if (c < best_code) {
                best_code = c;
                best = perm;
            }
        }
        return g.induced(best);
    }

    auto type_less(const Graph & a, const Graph & b) -> bool
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        if (a.edge_count() != b.edge_count())
            return a.edge_count() < b.edge_count();
        return code_of(a) < code_of(b);
    }

    auto graph_types(std::size_t n) -> const std::vector<Graph> &
    {
        if (n > max_orbit_size)
            throw std::invalid_argument("type tables stop at " + std::to_string(max_orbit_size) + " vertices");

        static std::array<std::vector<Graph>, max_orbit_size + 1> tables;
        static std::once_flag built;
        std::call_once(built, [] {
            for (std::size_t m = 0; m <= max_orbit_size; ++m) {
                std::vector<std::pair<Vertex, Vertex>> pairs;
                for (Vertex u = 0; u < m; ++u)
                    for (Vertex v = u + 1; v < m; ++v)
                        pairs.emplace_back(u, v);
                std::set<std::uint64_t> codes;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                    Graph g(m);
                    for (std::size_t i = 0; i < pairs.size(); ++i)
                        if (mask >> i & 1)
                            g.add_edge(pairs[i].first, pairs[i].second);
                    auto c = canonical_form(g);
                    if (codes.insert(code_of(c)).second)
                        tables[m].push_back(std::move(c));
                }
                std::sort(tables[m].begin(), tables[m].end(), type_less);
            }
        });
        return tables[n];
    }

    auto apply_generator(OrbitGenerator gen, const Graph & g) -> std::vector<Graph>
    {
        const auto n = g.size();
        std::vector<Graph> out;
        switch (gen) {
        case OrbitGenerator::Identity: out.push_back(g); break;
        case OrbitGenerator::Minus: out.push_back(complement_graph(g)); break;
        case OrbitGenerator::Switch:
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
                std::vector<Vertex> s;
                for (Vertex v = 0; v < n; ++v)
                    if (mask >> v & 1)
                        s.push_back(v);
                out.push_back(switch_graph(g, s));
            }
            if (out.empty())
                out.push_back(g);
            break;
        case OrbitGenerator::ToClique: out.push_back(complete_graph(n)); break;
        case OrbitGenerator::ToIndependent: out.push_back(empty_graph(n)); break;
        case OrbitGenerator::ToPoint: out.push_back(n == 0 ? g : complete_graph(1)); break;
        case OrbitGenerator::DeleteEdge:
            for (auto [u, v] : g.edges()) {
                auto h = g;
                h.remove_edge(u, v);
                out.push_back(std::move(h));
            }
            break;
        case OrbitGenerator::AddEdge:
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (! g.adjacent(u, v)) {
                        auto h = g;
                        h.add_edge(u, v);
                        out.push_back(std::move(h));
                    }
            break;
        }

        for (auto & h : out)
            h = canonical_form(h);
        std::sort(out.begin(), out.end(), type_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    auto orbit_closure(const Graph & start, std::span<const OrbitGenerator> gens) -> std::vector<Graph>
    {
        if (start.size() > max_orbit_size)
            throw std::invalid_argument("orbit closure works on at most " + std::to_string(max_orbit_size) + " vertices");

        std::vector<Graph> found{canonical_form(start)};
        for (std::size_t i = 0; i < found.size(); ++i)
            for (auto gen : gens)
                for (auto & h : apply_generator(gen, found[i]))
                    if (std::find(found.begin(), found.end(), h) == found.end())
                        found.push_back(std::move(h));
        std::sort(found.begin(), found.end(), type_less);
        return found;
    }
}

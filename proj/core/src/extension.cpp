#include <rado/graph.hpp>

#include <cmath>
#include <random>

namespace rado
{
    namespace
    {
        // Least split of W without an outside witness, if any.
        auto failing_split(const Graph & g, const std::vector<Vertex> & w, VertexSet & scratch) -> std::optional<ExtensionFailure>
        {
            const auto s = w.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
                scratch.set();
                for (auto v : w)
                    scratch.reset(v);
                for (std::size_t i = 0; i < s && scratch.any(); ++i) {
                    if (mask & (std::uint64_t{1} << i))
                        scratch &= g.row(w[i]);
                    else
                        scratch -= g.row(w[i]);
                }
                if (scratch.none()) {
                    ExtensionFailure f;
                    for (std::size_t i = 0; i < s; ++i)
                        (mask & (std::uint64_t{1} << i) ? f.adjacent_to : f.non_adjacent_to).push_back(w[i]);
                    return f;
                }
            }
            return std::nullopt;
        }
    }

    auto check_extension(const Graph & g, unsigned k) -> ExtensionResult
    {
        const auto n = g.size();
        VertexSet scratch(n);

        for (std::size_t s = 0; s <= k; ++s) {
            if (s > n) {
                // no set of this size exists
                break;
            }
            std::vector<Vertex> w(s);
            for (std::size_t i = 0; i < s; ++i)
                w[i] = static_cast<Vertex>(i);

            while (true) {
                if (auto f = failing_split(g, w, scratch))
                    return f;

                // next s-combination in lexicographic order
                std::size_t i = s;
                while (i > 0 && w[i - 1] == n - s + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++w[i - 1];
                for (std::size_t j = i; j < s; ++j)
                    w[j] = w[j - 1] + 1;
            }
        }
        return std::nullopt;
    }

    ExtensionBudgetExceeded::ExtensionBudgetExceeded(Graph partial, ExtensionFailure failing) :
        std::runtime_error("extension repair exceeded the vertex budget at " + std::to_string(partial.size()) + " vertices"),
        _partial(std::move(partial)),
        _failing(std::move(failing))
    {
    }

    namespace
    {
        // Smallest n at which G(n, 1/2) has fewer than n/4 expected failing
        // (U, U') pairs; the repair loop takes care of the rest.
        auto initial_size(unsigned k) -> std::size_t
        {
            for (std::size_t n = k + 1;; ++n) {
                double expected = 0.0;
                double choose = 1.0;
                for (unsigned s = 0; s <= k && s <= n; ++s) {
                    if (s > 0)
                        choose = choose * static_cast<double>(n - s + 1) / s;
                    const double miss = std::pow(1.0 - std::ldexp(1.0, -static_cast<int>(s)), static_cast<double>(n - s));
                    expected += choose * std::ldexp(1.0, static_cast<int>(s)) * miss;
                }
                if (expected < static_cast<double>(n) / 4.0)
                    return n;
            }
        }
    }

    auto build_ec(unsigned k, std::uint64_t seed, const ExtensionBuildOptions & options) -> Graph
    {
        if (k < 1)
            throw std::invalid_argument("build_ec needs k >= 1");

        std::mt19937_64 rng(seed);
        auto coin = [&] { return (rng() >> 63) != 0; };

        Graph g(initial_size(k));
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if (coin())
                    g.add_edge(u, v);

        while (auto failure = check_extension(g, k)) {
            if (g.size() >= options.max_vertices)
                throw ExtensionBudgetExceeded(g, *failure);

            const auto w = g.add_vertex();
            for (Vertex u = 0; u < w; ++u)
                if (coin())
                    g.add_edge(u, w);
            for (auto u : failure->adjacent_to)
                g.add_edge(u, w);
            for (auto u : failure->non_adjacent_to)
                g.remove_edge(u, w);
        }
        return g;
    }
}

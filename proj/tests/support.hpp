#pragma once

// Brute-force oracles and hand-rolled generators shared by the unit tests.
// Nothing here calls the search kernels under test.

#include <rado/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace rado::testing
{
    inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }

    inline auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph
    {
        Graph g(n);
        std::size_t bit = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1)
                    g.add_edge(u, v);
        return g;
    }

    /// Every labelled graph on n vertices.
    inline void for_each_graph(std::size_t n, const std::function<void(const Graph &)> & visit)
    {
        const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            visit(graph_from_mask(n, mask));
    }

    inline auto edges_among(const Graph & g, const std::vector<Vertex> & t) -> unsigned
    {
        unsigned count = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                count += g.adjacent(t[i], t[j]) ? 1 : 0;
        return count;
    }

    inline auto pairwise_distinct(const std::vector<Vertex> & t) -> bool
    {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                if (t[i] == t[j])
                    return false;
        return true;
    }

    inline auto parity_member(const Graph & g, const std::vector<Vertex> & t) -> bool
    {
        return pairwise_distinct(t) && edges_among(g, t) % 2 == 1;
    }

    /// All k-subsets of 0..n-1, lexicographic.
    inline auto combinations(std::size_t n, std::size_t k) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        std::vector<Vertex> cur;
        std::function<void(Vertex)> rec = [&](Vertex start) {
            if (cur.size() == k) {
                out.push_back(cur);
                return;
            }
            for (Vertex v = start; v < n; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    }

    /// All length-k tuples over 0..n-1, lexicographic.
    inline void for_each_tuple(std::size_t n, std::size_t k, const std::function<void(const std::vector<Vertex> &)> & visit)
    {
        std::vector<Vertex> t(k, 0);
        if (k > 0 && n == 0)
            return;
        while (true) {
            visit(t);
            std::size_t pos = k;
            while (pos > 0) {
                if (++t[pos - 1] < n)
                    break;
                t[pos - 1] = 0;
                --pos;
            }
            if (pos == 0)
                return;
        }
    }

    struct NaiveFailure
    {
        std::vector<Vertex> adjacent_to;
        std::vector<Vertex> non_adjacent_to;
    };

    /// Double loop over (U, U') and candidate witnesses, in the documented order.
    inline auto naive_extension(const Graph & g, unsigned k) -> std::optional<NaiveFailure>
    {
        const auto n = g.size();
        for (std::size_t size = 0; size <= k && size <= n; ++size)
            for (const auto & w : combinations(n, size))
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
                    NaiveFailure split;
                    for (std::size_t i = 0; i < size; ++i)
                        (mask >> i & 1 ? split.adjacent_to : split.non_adjacent_to).push_back(w[i]);
                    bool found = false;
                    for (Vertex z = 0; z < n && ! found; ++z) {
                        if (std::find(w.begin(), w.end(), z) != w.end())
                            continue;
                        bool ok = true;
                        for (auto u : split.adjacent_to)
                            ok = ok && g.adjacent(z, u);
                        for (auto u : split.non_adjacent_to)
                            ok = ok && ! g.adjacent(z, u);
                        found = ok;
                    }
                    if (! found)
                        return split;
                }
        return std::nullopt;
    }

    /// Every induced embedding, lexicographic, by trying all injective tuples.
    inline auto naive_embeddings(const Graph & pattern, const Graph & host) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        for_each_tuple(host.size(), pattern.size(), [&](const std::vector<Vertex> & t) {
            if (! pairwise_distinct(t))
                return;
            for (Vertex u = 0; u < pattern.size(); ++u)
                for (Vertex v = u + 1; v < pattern.size(); ++v)
                    if (pattern.adjacent(u, v) != host.adjacent(t[u], t[v]))
                        return;
            out.push_back(t);
        });
        return out;
    }

    inline auto quadratic_residues(std::uint32_t q) -> std::vector<std::uint32_t>
    {
        std::vector<std::uint32_t> r;
        for (std::uint32_t x = 1; x < q; ++x)
            r.push_back(x * x % q);
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    /// Residue graph built straight from the definition.
    inline auto naive_paley(std::uint32_t q) -> Graph
    {
        const auto qr = quadratic_residues(q);
        Graph g(q);
        for (Vertex a = 0; a < q; ++a)
            for (Vertex b = a + 1; b < q; ++b)
                if (std::binary_search(qr.begin(), qr.end(), (b - a) % q))
                    g.add_edge(a, b);
        return g;
    }
}

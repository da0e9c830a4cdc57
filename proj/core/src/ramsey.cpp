#include <rado/ramsey.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <thread>

namespace rado
{
    auto as_structure(const Graph & g) -> PartitionedGraph
    {
        return PartitionedGraph::single_part(g);
    }

    auto as_structure(const ConstantGraph & cg) -> PartitionedGraph
    {
        return associate_partitioned(cg);
    }

    auto CopyTable::monochromatic(std::size_t h, std::span<const unsigned> coloring) const -> bool
    {
        const auto & members = h_members[h];
        for (std::size_t i = 1; i < members.size(); ++i)
            if (coloring[members[i]] != coloring[members[0]])
                return false;
        return true;
    }

    namespace
    {
        auto image_set(const Embedding & e, std::size_t n) -> VertexSet
        {
            VertexSet s(n);
            for (auto v : e.image)
                s.set(v);
            return s;
        }

        auto sorted_image(const Embedding & e) -> std::vector<Vertex>
        {
            auto s = e.image;
            std::sort(s.begin(), s.end());
            return s;
        }
    }

    auto enumerate_copies(const ArrowQuery & q, std::uint64_t max_copies) -> CopyTable
    {
        const auto n = q.S.graph.size();
        CopyTable table;

        std::map<std::vector<Vertex>, Embedding> p_copies;
        visit_embeddings(q.P.graph, q.S.graph, part_constraints(q.P, q.S, q.ordered), [&](const Embedding & e) {
            p_copies.try_emplace(sorted_image(e), e);
            if (p_copies.size() > max_copies)
                throw RamseyBudgetExceeded("more than " + std::to_string(max_copies) + " copies of P in S");
            return true;
        });
        std::vector<VertexSet> p_bits;
        for (auto & [set, e] : p_copies) {
            table.p_sets.push_back(set);
            table.p_embeddings.push_back(e);
            p_bits.push_back(image_set(e, n));
        }

        std::map<std::vector<Vertex>, std::size_t> seen;
        visit_embeddings(q.H.graph, q.S.graph, part_constraints(q.H, q.S, q.ordered), [&](const Embedding & e) {
            if (! seen.try_emplace(sorted_image(e), table.h_embeddings.size()).second)
                return true;
            if (seen.size() > max_copies)
                throw RamseyBudgetExceeded("more than " + std::to_string(max_copies) + " copies of H in S");
            const auto bits = image_set(e, n);
            auto & members = table.h_members.emplace_back();
            for (std::size_t i = 0; i < p_bits.size(); ++i)
                if (p_bits[i].is_subset_of(bits))
                    members.push_back(i);
            table.h_embeddings.push_back(e);
            return true;
        });
        return table;
    }

    auto find_mono_copy(const CopyTable & table, std::span<const unsigned> coloring) -> std::optional<Embedding>
    {
        if (coloring.size() != table.p_sets.size())
            throw std::invalid_argument("colouring must assign a colour to every copy of P");
        for (std::size_t h = 0; h < table.h_embeddings.size(); ++h)
            if (table.monochromatic(h, coloring))
                return table.h_embeddings[h];
        return std::nullopt;
    }

    auto find_mono_copy(const ArrowQuery & q, std::span<const unsigned> coloring) -> std::optional<Embedding>
    {
        return find_mono_copy(enumerate_copies(q), coloring);
    }

    auto to_string(ArrowOutcome o) -> std::string
    {
        switch (o) {
        case ArrowOutcome::Holds: return "Holds";
        case ArrowOutcome::Fails: return "Fails";
        case ArrowOutcome::BudgetExceeded: return "BudgetExceeded";
        }
        return "?";
    }

    namespace
    {
        // k^e, or nullopt past 64 bits
        auto checked_power(std::uint64_t k, std::uint64_t e) -> std::optional<std::uint64_t>
        {
            std::uint64_t result = 1;
            for (std::uint64_t i = 0; i < e; ++i) {
                if (result > std::numeric_limits<std::uint64_t>::max() / k)
                    return std::nullopt;
                result *= k;
            }
            return result;
        }

        struct BlockResult
        {
            std::optional<std::uint64_t> failing_index;
            std::vector<unsigned> witness;
        };

        // scans colourings with index in [begin, end); the free digits are
        // positions first..m-1, the last one least significant
        auto scan_block(const CopyTable & table, unsigned k, std::size_t first, std::uint64_t begin, std::uint64_t end)
            -> BlockResult
        {
            const auto m = table.p_sets.size();
            std::vector<unsigned> coloring(m, 0);
            auto index = begin;
            for (auto pos = m; pos > first && index > 0; --pos) {
                coloring[pos - 1] = static_cast<unsigned>(index % k);
                index /= k;
            }

            for (auto i = begin; i < end; ++i) {
                bool some_mono = false;
                for (std::size_t h = 0; h < table.h_embeddings.size() && ! some_mono; ++h)
                    some_mono = table.monochromatic(h, coloring);
                if (! some_mono)
                    return BlockResult{i, coloring};

                for (auto pos = m; pos > first; --pos) {
                    if (++coloring[pos - 1] < k)
                        break;
                    coloring[pos - 1] = 0;
                }
            }
            return {};
        }
    }

    auto verify_arrow(const ArrowQuery & q, const ArrowOptions & options) -> ArrowVerdict
    {
        if (q.k < 1)
            throw std::invalid_argument("colour count must be at least 1");

        ArrowVerdict verdict;
        verdict.stats.vacuous = ! find_first_embedding(q.P.graph, q.H.graph, part_constraints(q.P, q.H, q.ordered));

        try {
            verdict.table = enumerate_copies(q, options.budget.max_copies);
        }
        catch (const RamseyBudgetExceeded &) {
            verdict.outcome = ArrowOutcome::BudgetExceeded;
            verdict.stats.copy_budget_hit = true;
            return verdict;
        }

        const auto & table = verdict.table;
        const auto m = table.p_sets.size();
        verdict.stats.p_copies = m;
        verdict.stats.h_copies = table.h_embeddings.size();

        const std::size_t first = (options.fix_first_color && m > 0) ? 1 : 0;
        verdict.stats.colorings_total = checked_power(q.k, m - first);

        std::uint64_t limit = options.budget.max_colorings;
        if (verdict.stats.colorings_total)
            limit = std::min(limit, *verdict.stats.colorings_total);

        const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::min<std::uint64_t>(limit, 64))));
        std::vector<BlockResult> results(workers);
        const auto chunk = (limit + workers - 1) / workers;
        if (workers == 1)
            results[0] = scan_block(table, q.k, first, 0, limit);
        else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                const auto begin = std::min(limit, w * chunk);
                const auto end = std::min(limit, begin + chunk);
                pool.emplace_back([&, w, begin, end] { results[w] = scan_block(table, q.k, first, begin, end); });
            }
            for (auto & t : pool)
                t.join();
        }

        for (auto & r : results)
            if (r.failing_index) {
                verdict.outcome = ArrowOutcome::Fails;
                verdict.witness = std::move(r.witness);
                verdict.stats.colorings_examined = *r.failing_index + 1;
                return verdict;
            }

        verdict.stats.colorings_examined = limit;
        const bool complete = verdict.stats.colorings_total && limit == *verdict.stats.colorings_total;
        verdict.outcome = complete ? ArrowOutcome::Holds : ArrowOutcome::BudgetExceeded;
        return verdict;
    }

    auto find_edge_nonedge_mono_copy(const Graph & host, const Graph & pattern, const PairColoring & chi_e,
        const PairColoring & chi_n) -> std::optional<Embedding>
    {
        if (chi_e.size() != host.size() || chi_n.size() != host.size())
            throw std::invalid_argument("pair colourings must be indexed by host vertices");

        const auto pattern_edges = pattern.edges();
        std::vector<std::pair<Vertex, Vertex>> pattern_non_edges;
        for (Vertex u = 0; u < pattern.size(); ++u)
            for (Vertex v = u + 1; v < pattern.size(); ++v)
                if (! pattern.adjacent(u, v))
                    pattern_non_edges.emplace_back(u, v);

        auto constant_on = [](const PairColoring & chi, const auto & pairs, const Embedding & e) {
            for (std::size_t i = 1; i < pairs.size(); ++i)
                if (chi[e[pairs[i].first]][e[pairs[i].second]] != chi[e[pairs[0].first]][e[pairs[0].second]])
                    return false;
            return true;
        };

        std::optional<Embedding> found;
        visit_embeddings(pattern, host, {}, [&](const Embedding & e) {
            if (constant_on(chi_e, pattern_edges, e) && constant_on(chi_n, pattern_non_edges, e)) {
                found = e;
                return false;
            }
            return true;
        });
        return found;
    }

    auto induced_pair_coloring(const FunctionGadget & f) -> std::pair<PairColoring, PairColoring>
    {
        if (! f.covers_src())
            throw std::invalid_argument("induced pair colouring needs a gadget defined on its whole source");

        const auto n = f.src().size();
        PairColoring chi_e(n, std::vector<int>(n, -1));
        PairColoring chi_n(n, std::vector<int>(n, -1));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                auto & chi = f.src().adjacent(u, v) ? chi_e : chi_n;
                chi[u][v] = chi[v][u] = static_cast<int>(pair_color(f, u, v));
            }
        return {chi_e, chi_n};
    }
}

#include "support.hpp"

#include <rado/ramsey.hpp>

#include <gtest/gtest.h>

using namespace rado;
using namespace rado::testing;

namespace
{
    auto ptr(Graph g) -> GraphPtr
    {
        return std::make_shared<const Graph>(std::move(g));
    }

    auto plain_query(const Graph & s, const Graph & h, const Graph & p, unsigned k) -> ArrowQuery
    {
        return ArrowQuery{as_structure(s), as_structure(h), as_structure(p), k, false};
    }

    auto edge_index(std::size_t n) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n, 0));
        std::size_t next = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                idx[u][v] = idx[v][u] = next++;
        return idx;
    }

    // every triangle of K_n, straight from the definition
    auto has_mono_triangle(std::size_t n, const std::vector<unsigned> & colors) -> bool
    {
        const auto idx = edge_index(n);
        for (const auto & t : combinations(n, 3)) {
            const auto a = colors[idx[t[0]][t[1]]], b = colors[idx[t[0]][t[2]]], c = colors[idx[t[1]][t[2]]];
            if (a == b && b == c)
                return true;
        }
        return false;
    }

    // least 2-colouring of the edges of K_n (first edge fixed to 0) without a monochromatic triangle
    auto least_triangle_free_coloring(std::size_t n) -> std::optional<std::vector<unsigned>>
    {
        const auto m = n * (n - 1) / 2;
        for (std::uint64_t index = 0; index < (std::uint64_t{1} << (m - 1)); ++index) {
            std::vector<unsigned> colors(m, 0);
            for (std::size_t i = 1; i < m; ++i)
                colors[i] = static_cast<unsigned>(index >> (m - 1 - i) & 1);
            if (! has_mono_triangle(n, colors))
                return colors;
        }
        return std::nullopt;
    }

    auto random_coloring(std::size_t m, unsigned k, std::mt19937_64 & rng) -> std::vector<unsigned>
    {
        std::vector<unsigned> c(m);
        for (auto & x : c)
            x = static_cast<unsigned>(rng() % k);
        return c;
    }

    auto pentagon_split() -> std::vector<unsigned>
    {
        // p_sets of K2 in K5 are the 10 pairs in lexicographic order
        std::vector<unsigned> colors;
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = u + 1; v < 5; ++v)
                colors.push_back(v - u == 1 || v - u == 4 ? 0 : 1);
        return colors;
    }
}

TEST(CopyTable, EdgesOfKFive)
{
    const auto table = enumerate_copies(plain_query(complete_graph(5), complete_graph(3), complete_graph(2), 2));
    ASSERT_EQ(table.p_sets.size(), 10u);
    EXPECT_EQ(table.p_sets.front(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(table.p_sets.back(), (std::vector<Vertex>{3, 4}));
    ASSERT_EQ(table.h_embeddings.size(), 10u);
    EXPECT_EQ(table.h_embeddings.front().image, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(table.h_members.front(), (std::vector<std::size_t>{0, 1, 4}));
}

TEST(MonoCopy, OneColourGivesLeastCopy)
{
    const auto host = build_paley(13).graph;
    const auto q = plain_query(host, path_graph(3), complete_graph(2), 1);
    const auto table = enumerate_copies(q);
    const std::vector<unsigned> zeros(table.p_sets.size(), 0);
    const auto copy = find_mono_copy(table, zeros);
    ASSERT_TRUE(copy);
    EXPECT_EQ(*copy, *find_first_embedding(path_graph(3), host));
}

TEST(MonoCopy, EveryColouringOfKSixHasAMonochromaticTriangle)
{
    const auto table = enumerate_copies(plain_query(complete_graph(6), complete_graph(3), complete_graph(2), 2));
    ASSERT_EQ(table.p_sets.size(), 15u);
    std::vector<unsigned> colors(15);
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        for (std::size_t i = 0; i < 15; ++i)
            colors[i] = mask >> i & 1;
        ASSERT_TRUE(has_mono_triangle(6, colors));
        ASSERT_TRUE(find_mono_copy(table, colors)) << mask;
    }
}

TEST(MonoCopy, PentagonSplitOfKFive)
{
    const auto q = plain_query(complete_graph(5), complete_graph(3), complete_graph(2), 2);
    const auto colors = pentagon_split();
    EXPECT_FALSE(has_mono_triangle(5, colors));
    EXPECT_FALSE(find_mono_copy(q, colors));
}

TEST(MonoCopy, MatchesTriangleOracleOnRandomColourings)
{
    const auto table = enumerate_copies(plain_query(complete_graph(6), complete_graph(3), complete_graph(2), 3));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const auto colors = random_coloring(15, 3, rng);
        EXPECT_EQ(find_mono_copy(table, colors).has_value(), has_mono_triangle(6, colors));
    }
}

TEST(MonoCopy, WrongColouringSizeThrows)
{
    const auto q = plain_query(complete_graph(4), complete_graph(3), complete_graph(2), 2);
    EXPECT_THROW(find_mono_copy(q, std::vector<unsigned>{0, 1}), std::invalid_argument);
}

TEST(VerifyArrow, KSixHolds)
{
    const auto v = verify_arrow(plain_query(complete_graph(6), complete_graph(3), complete_graph(2), 2));
    EXPECT_EQ(v.outcome, ArrowOutcome::Holds);
    EXPECT_EQ(v.stats.p_copies, 15u);
    EXPECT_EQ(v.stats.h_copies, 20u);
    EXPECT_EQ(v.stats.colorings_total, std::uint64_t{1} << 14);
    EXPECT_EQ(v.stats.colorings_examined, std::uint64_t{1} << 14);
    EXPECT_FALSE(v.witness);
}

TEST(VerifyArrow, KFiveFailsWithLeastWitness)
{
    const auto oracle = least_triangle_free_coloring(5);
    ASSERT_TRUE(oracle);
    // frozen from the oracle above
    const std::vector<unsigned> frozen{0, 0, 1, 1, 1, 0, 1, 1, 0, 0};
    ASSERT_EQ(*oracle, frozen);

    const auto v = verify_arrow(plain_query(complete_graph(5), complete_graph(3), complete_graph(2), 2));
    ASSERT_EQ(v.outcome, ArrowOutcome::Fails);
    EXPECT_EQ(*v.witness, frozen);
    EXPECT_EQ(v.stats.colorings_examined, 237u);
    EXPECT_FALSE(find_mono_copy(v.table, *v.witness));

    // the least witness is a pentagon/pentagram split: each colour class is a 5-cycle
    Graph zero(5);
    for (std::size_t i = 0; i < 10; ++i)
        if (frozen[i] == 0)
            zero.add_edge(v.table.p_sets[i][0], v.table.p_sets[i][1]);
    EXPECT_TRUE(find_first_embedding(cycle_graph(5), zero));
    EXPECT_EQ(zero.edge_count(), 5u);
}

TEST(VerifyArrow, SingleColourHolds)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto h = random_graph(5, 0.5, rng);
        const auto v = verify_arrow(plain_query(h, h, complete_graph(2), 1));
        EXPECT_EQ(v.outcome, ArrowOutcome::Holds);
        EXPECT_EQ(v.stats.colorings_total, 1u);
    }
}

TEST(VerifyArrow, VacuousWhenPatternMissing)
{
    const auto v = verify_arrow(plain_query(complete_graph(4), complete_graph(3), empty_graph(2), 2));
    EXPECT_TRUE(v.stats.vacuous);
    EXPECT_EQ(v.outcome, ArrowOutcome::Holds);
    const auto missing = verify_arrow(plain_query(complete_graph(2), complete_graph(3), complete_graph(2), 2));
    EXPECT_EQ(missing.outcome, ArrowOutcome::Fails);
}

TEST(VerifyArrow, PruningNeverChangesTheVerdict)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = random_graph(5 + rng() % 2, 0.6, rng);
        const auto h = trial % 2 ? complete_graph(3) : path_graph(3);
        const auto q = plain_query(s, h, complete_graph(2), 2);
        ArrowOptions unpruned;
        unpruned.fix_first_color = false;
        const auto a = verify_arrow(q), b = verify_arrow(q, unpruned);
        EXPECT_EQ(a.outcome, b.outcome);
        if (a.witness && ! a.witness->empty()) {
            // with the first colour free, the least witness starts with colour 0 as well
            EXPECT_EQ(*a.witness, *b.witness);
        }
    }
}

TEST(VerifyArrow, AntitoneInTheHost)
{
    std::mt19937_64 rng(11);
    unsigned transported = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = random_graph(6, 0.7, rng);
        const auto big = verify_arrow(plain_query(s, complete_graph(3), complete_graph(2), 2));
        if (big.outcome != ArrowOutcome::Fails)
            continue;
        std::vector<Vertex> keep;
        const Vertex drop = rng() % 6;
        for (Vertex v = 0; v < 6; ++v)
            if (v != drop)
                keep.push_back(v);
        const auto small = s.induced(keep);
        const auto q = plain_query(small, complete_graph(3), complete_graph(2), 2);
        const auto table = enumerate_copies(q);

        // colour each edge of the subgraph by the colour of its image edge
        std::vector<unsigned> colors;
        for (const auto & set : table.p_sets) {
            std::vector<Vertex> image{keep[set[0]], keep[set[1]]};
            const auto at = std::find(big.table.p_sets.begin(), big.table.p_sets.end(), image);
            ASSERT_NE(at, big.table.p_sets.end());
            colors.push_back((*big.witness)[static_cast<std::size_t>(at - big.table.p_sets.begin())]);
        }
        EXPECT_FALSE(find_mono_copy(table, colors));
        EXPECT_EQ(verify_arrow(q).outcome, ArrowOutcome::Fails);
        ++transported;
    }
    EXPECT_GT(transported, 0u);
}

TEST(VerifyArrow, ThreadCountDoesNotChangeTheResult)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = random_graph(6, 0.6, rng);
        const auto q = plain_query(s, complete_graph(3), complete_graph(2), 2);
        ArrowOptions three;
        three.threads = 3;
        const auto a = verify_arrow(q), b = verify_arrow(q, three);
        EXPECT_EQ(a.outcome, b.outcome);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.stats.colorings_examined, b.stats.colorings_examined);
    }
    ArrowOptions four;
    four.threads = 4;
    EXPECT_EQ(*verify_arrow(plain_query(complete_graph(5), complete_graph(3), complete_graph(2), 2), four).witness,
        (std::vector<unsigned>{0, 0, 1, 1, 1, 0, 1, 1, 0, 0}));
}

TEST(VerifyArrow, HoldsIsSoundOnRandomColourings)
{
    const auto q = plain_query(complete_graph(6), complete_graph(3), complete_graph(2), 2);
    const auto v = verify_arrow(q);
    ASSERT_EQ(v.outcome, ArrowOutcome::Holds);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1000; ++trial)
        ASSERT_TRUE(find_mono_copy(v.table, random_coloring(v.table.p_sets.size(), 2, rng)));
}

TEST(VerifyArrow, Budgets)
{
    const auto q = plain_query(complete_graph(6), complete_graph(3), complete_graph(2), 2);
    ArrowOptions tight;
    tight.budget.max_colorings = 100;
    const auto v = verify_arrow(q, tight);
    EXPECT_EQ(v.outcome, ArrowOutcome::BudgetExceeded);
    EXPECT_EQ(v.stats.colorings_examined, 100u);
    EXPECT_FALSE(v.stats.copy_budget_hit);

    ArrowOptions few_copies;
    few_copies.budget.max_copies = 10;
    const auto c = verify_arrow(q, few_copies);
    EXPECT_EQ(c.outcome, ArrowOutcome::BudgetExceeded);
    EXPECT_TRUE(c.stats.copy_budget_hit);
    EXPECT_THROW(enumerate_copies(q, 10), RamseyBudgetExceeded);

    EXPECT_THROW(verify_arrow(plain_query(complete_graph(3), complete_graph(3), complete_graph(2), 0)), std::invalid_argument);
}

TEST(VerifyArrow, OrderedCopies)
{
    auto q = plain_query(complete_graph(5), complete_graph(3), complete_graph(2), 2);
    q.ordered = true;
    const auto table = enumerate_copies(q);
    EXPECT_EQ(table.p_sets.size(), 10u);
    for (const auto & e : table.h_embeddings)
        EXPECT_TRUE(std::is_sorted(e.image.begin(), e.image.end()));
    EXPECT_EQ(verify_arrow(q).outcome, ArrowOutcome::Fails);

    // an increasing path needs its middle vertex in the middle
    auto path = plain_query(path_graph(3), path_graph(3), complete_graph(2), 1);
    path.ordered = true;
    EXPECT_EQ(enumerate_copies(path).h_embeddings.size(), 1u);
    path.S = as_structure(Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}}));
    EXPECT_EQ(enumerate_copies(path).h_embeddings.size(), 0u);
}

TEST(VerifyArrow, ConstantStructures)
{
    const auto s = as_structure(ConstantGraph(complete_graph(6), {0}));
    const auto h = as_structure(ConstantGraph(complete_graph(3), {0}));
    const auto p = as_structure(ConstantGraph(complete_graph(2), {0}));
    const auto v = verify_arrow(ArrowQuery{s, h, p, 2, false});
    // copies of P are the five edges at the constant, each triangle holds two of them
    EXPECT_EQ(v.stats.p_copies, 5u);
    EXPECT_EQ(v.outcome, ArrowOutcome::Holds);
}

TEST(EdgeNonEdgeMono, ConstantColouringsGiveLeastCopy)
{
    const auto host = build_paley(13).graph;
    const PairColoring zero(13, std::vector<int>(13, 0));
    EXPECT_EQ(*find_edge_nonedge_mono_copy(host, path_graph(3), zero, zero), *find_first_embedding(path_graph(3), host));
    EXPECT_EQ(*find_edge_nonedge_mono_copy(host, complete_graph(2), zero, zero), *find_first_embedding(complete_graph(2), host));
}

TEST(EdgeNonEdgeMono, ResidueClassColouringOnPaleyThirteen)
{
    const auto host = build_paley(13).graph;
    PairColoring chi_e(13, std::vector<int>(13, -1)), chi_n = chi_e;
    for (Vertex u = 0; u < 13; ++u)
        for (Vertex v = 0; v < 13; ++v) {
            if (u == v)
                continue;
            const int color = static_cast<int>((u + v) % 13 % 2);
            (host.adjacent(u, v) ? chi_e : chi_n)[u][v] = color;
        }
    const auto copy = find_edge_nonedge_mono_copy(host, path_graph(3), chi_e, chi_n);
    ASSERT_TRUE(copy);
    const auto a = (*copy)[0], b = (*copy)[1], c = (*copy)[2];
    EXPECT_EQ(chi_e[a][b], chi_e[b][c]);
    EXPECT_FALSE(host.adjacent(a, c));

    // least by brute force over all copies
    for (const auto & e : naive_embeddings(path_graph(3), host)) {
        if (chi_e[e[0]][e[1]] == chi_e[e[1]][e[2]]) {
            EXPECT_EQ(copy->image, e);
            break;
        }
    }
}

TEST(InducedColouring, NamedGadgets)
{
    const auto g = ptr(build_paley(13).graph);
    const auto check = [&](const FunctionGadget & f, PairColor on_edges, PairColor on_non_edges) {
        const auto [chi_e, chi_n] = induced_pair_coloring(f);
        for (Vertex u = 0; u < 13; ++u)
            for (Vertex v = 0; v < 13; ++v) {
                if (u == v)
                    continue;
                if (g->adjacent(u, v)) {
                    EXPECT_EQ(chi_e[u][v], static_cast<int>(on_edges));
                    EXPECT_EQ(chi_n[u][v], -1);
                }
                else {
                    EXPECT_EQ(chi_n[u][v], static_cast<int>(on_non_edges));
                    EXPECT_EQ(chi_e[u][v], -1);
                }
            }
    };
    check(make_identity(g), PairColor::Edge, PairColor::NonEdge);
    check(make_constant(g, g, 0), PairColor::Collapsed, PairColor::Collapsed);
    check(make_minus(g), PairColor::NonEdge, PairColor::Edge);
    EXPECT_THROW(induced_pair_coloring(make_identity(g, std::vector<Vertex>{0, 1})), std::invalid_argument);
}

TEST(InducedColouring, MonoCopyGivesNarrowClassSet)
{
    const auto host = ptr(build_paley(29).graph);
    std::mt19937_64 rng(19);
    const Graph pattern = Graph::from_edges(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
    unsigned found = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const auto dst = ptr(random_graph(6, 0.5, rng));
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex v = 0; v < 29; ++v)
            pairs.emplace_back(v, rng() % 6);
        const auto f = make_custom(host, dst, pairs);
        const auto [chi_e, chi_n] = induced_pair_coloring(f);
        const auto copy = find_edge_nonedge_mono_copy(*host, pattern, chi_e, chi_n);
        if (! copy)
            continue;
        ++found;
        const auto classes = classify_on_set(f, copy->image);
        EXPECT_TRUE(classes.size() == 1 || classes.size() == 2) << to_string(classes);
    }
    EXPECT_GT(found, 0u);
}

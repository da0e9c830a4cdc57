#include "support.hpp"

#include <rado/relations.hpp>

#include <gtest/gtest.h>

#include <fstream>

using namespace rado;
using namespace rado::testing;

namespace
{
    // identity vertex map, both directions, straight from the definition
    auto naive_identity_invariant(const Graph & a, const Graph & b, unsigned k) -> bool
    {
        bool ok = true;
        for_each_tuple(a.size(), k, [&](const std::vector<Vertex> & t) {
            ok = ok && parity_member(a, t) == parity_member(b, t);
        });
        return ok;
    }

    auto single(Vertex v) -> std::vector<Vertex>
    {
        return {v};
    }
}

TEST(Eval, ParityExamples)
{
    const auto r3 = Relation::parity(3), r4 = Relation::parity(4);
    EXPECT_TRUE(eval(r3, Tuple{0, 1, 2}, complete_graph(3)));
    EXPECT_FALSE(eval(r3, Tuple{0, 1, 2}, empty_graph(3)));
    EXPECT_TRUE(eval(r4, Tuple{0, 1, 2, 3}, path_graph(4)));
    EXPECT_FALSE(eval(r3, Tuple{0, 0, 1}, complete_graph(3)));
    EXPECT_THROW(eval(r3, Tuple{0, 1}, complete_graph(3)), std::invalid_argument);
    EXPECT_THROW(eval(r3, Tuple{0, 1, 5}, complete_graph(3)), std::invalid_argument);
}

TEST(Eval, ParityMatchesOracleAndIsSymmetric)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(6, 0.5, rng);
        for (unsigned k = 2; k <= 5; ++k) {
            const auto r = Relation::parity(k);
            for_each_tuple(g.size(), k, [&](const std::vector<Vertex> & t) {
                const bool member = eval(r, t, g);
                ASSERT_EQ(member, parity_member(g, t));
                auto p = t;
                std::sort(p.begin(), p.end());
                do
                    ASSERT_EQ(eval(r, p, g), member);
                while (std::next_permutation(p.begin(), p.end()));
            });
        }
    }
}

TEST(Formula, ParsesPrecedenceAndAbbreviations)
{
    const auto g = path_graph(3);
    const auto f = parse_formula("E(0,1) & !E(1,2) | x0=x2");
    EXPECT_TRUE(f.evaluate(Tuple{0, 1, 0}, g));
    EXPECT_FALSE(f.evaluate(Tuple{0, 1, 2}, g));
    EXPECT_TRUE(f.evaluate(Tuple{1, 0, 2}, empty_graph(3)) == false);

    const auto n = Relation::formula("N(0,1)");
    EXPECT_EQ(n.arity(), 2u);
    EXPECT_TRUE(eval(n, Tuple{0, 2}, g));
    EXPECT_FALSE(eval(n, Tuple{0, 1}, g));
    EXPECT_FALSE(eval(n, Tuple{0, 0}, g));

    EXPECT_EQ(Relation::formula("x0=x0").arity(), 1u);
    EXPECT_EQ(Relation::formula("true", 3).arity(), 3u);
    EXPECT_TRUE(eval(Relation::formula("x0!=x1 & (E(x0,x1) | !E(0,1))"), Tuple{0, 2}, g));
}

TEST(Formula, ErrorsCarryPositions)
{
    auto position_of = [](std::string_view text) -> std::optional<std::size_t> {
        try {
            parse_formula(text);
        }
        catch (const SpecError & e) {
            return e.position();
        }
        return std::nullopt;
    };
    EXPECT_EQ(position_of("E(0,1) & Q(1,2)"), 9u);
    EXPECT_EQ(position_of("E(0,1"), 5u);
    EXPECT_TRUE(position_of("E(0,1) &"));
    EXPECT_TRUE(position_of("E(0,1) E(1,2)"));
    EXPECT_FALSE(position_of("!(E(0,1))"));
    EXPECT_THROW(Relation::formula("E(0,3)", 2), std::invalid_argument);
}

TEST(RelationSpec, MiniLanguage)
{
    EXPECT_EQ(parse_relation_spec("parity:4").arity(), 4u);
    EXPECT_EQ(parse_relation_spec("distinct:3").arity(), 3u);
    EXPECT_EQ(parse_relation_spec("edge").arity(), 2u);
    EXPECT_EQ(parse_relation_spec("nonedge").arity(), 2u);
    EXPECT_EQ(parse_relation_spec("formula:E(0,1) & !E(1,2)").arity(), 3u);
    EXPECT_EQ(parse_relation_spec("formula[4]:E(0,1)").arity(), 4u);
    EXPECT_THROW(parse_relation_spec("parity:"), std::exception);
    EXPECT_THROW(parse_relation_spec("bogus:1"), std::exception);

    const auto path = ::testing::TempDir() + "rado_tuples.txt";
    {
        std::ofstream out(path);
        out << "0 1\n# comment\n1 2\n";
    }
    const auto r = parse_relation_spec("tuples:@" + path);
    EXPECT_EQ(r.arity(), 2u);
    EXPECT_TRUE(eval(r, Tuple{1, 2}, path_graph(3)));
    EXPECT_FALSE(eval(r, Tuple{2, 1}, path_graph(3)));
    EXPECT_FALSE(r.local());
}

TEST(Preservation, IdentityPreservesEverything)
{
    std::mt19937_64 rng(4);
    const std::vector<Relation> relations{Relation::parity(3), Relation::parity(4), Relation::edge(), Relation::non_edge(),
        Relation::pairwise_distinct(3), Relation::formula("E(0,1) | x1=x2")};
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = random_graph(7, 0.5, rng);
        const auto id = all_vertices(g);
        for (const auto & r : relations)
            EXPECT_TRUE(preserved_by_map(r, id, g, g).preserved()) << r.name();
    }
}

TEST(Preservation, SwitchBreaksAnEdge)
{
    const auto g = complete_graph(3);
    const auto sw = switch_graph(g, single(0));
    const auto result = preserved_by_map(Relation::edge(), all_vertices(g), g, sw);
    ASSERT_FALSE(result.preserved());
    EXPECT_EQ(*result.violation, (Tuple{0, 1}));
}

TEST(Preservation, LeastWitnessMatchesOracle)
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 80; ++trial) {
        const auto src = random_graph(5, 0.5, rng), dst = random_graph(6, 0.5, rng);
        std::vector<Vertex> map(5);
        for (auto & m : map)
            m = rng() % 6;
        for (unsigned k : {2u, 3u, 4u}) {
            std::optional<Tuple> oracle;
            for_each_tuple(5, k, [&](const std::vector<Vertex> & t) {
                if (oracle || ! parity_member(src, t))
                    return;
                Tuple image;
                for (auto v : t)
                    image.push_back(map[v]);
                if (! parity_member(dst, image))
                    oracle = t;
            });
            EXPECT_EQ(preserved_by_map(Relation::parity(k), map, src, dst).violation, oracle);
        }
    }
}

TEST(Preservation, DomainRestriction)
{
    const auto g = complete_graph(3);
    const auto sw = switch_graph(g, single(0));
    const std::vector<Vertex> dom{1, 2};
    EXPECT_TRUE(preserved_by_map(Relation::edge(), all_vertices(g), g, sw, dom).preserved());
}

TEST(Invariance, ParityThreeUnderEverySwitch)
{
    for (std::size_t n = 3; n <= 5; ++n)
        for_each_graph(n, [&](const Graph & g) {
            for (Vertex v = 0; v < n; ++v) {
                const auto sw = switch_graph(g, single(v));
                ASSERT_TRUE(naive_identity_invariant(g, sw, 3));
                ASSERT_TRUE(invariant_under_switch(Relation::parity(3), g, v).preserved());
                ASSERT_TRUE(preserved_by_map(Relation::parity(3), all_vertices(g), g, sw).preserved());
            }
        });
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_graph(6 + rng() % 2, 0.5, rng);
        for (Vertex v = 0; v < g.size(); ++v)
            ASSERT_TRUE(invariant_under_switch(Relation::parity(3), g, v).preserved());
    }
}

TEST(Invariance, ComplementExamples)
{
    for (std::size_t n = 4; n <= 6; ++n) {
        auto check = [&](const Graph & g) {
            ASSERT_TRUE(invariant_under_complement(Relation::parity(4), g).preserved());
            ASSERT_TRUE(invariant_under_complement(Relation::parity(5), g).preserved());
        };
        if (n <= 5)
            for_each_graph(n, check);
        else {
            std::mt19937_64 rng(12);
            for (int trial = 0; trial < 60; ++trial)
                check(random_graph(n, 0.5, rng));
        }
    }

    const auto r = invariant_under_complement(Relation::parity(3), complete_graph(3));
    ASSERT_FALSE(r.preserved());
    EXPECT_EQ(*r.violation, (Tuple{0, 1, 2}));
    EXPECT_TRUE(r.forward);

    const auto back = invariant_under_complement(Relation::parity(3), empty_graph(3));
    ASSERT_FALSE(back.preserved());
    EXPECT_FALSE(back.forward);
}

TEST(Invariance, ParityFourBrokenBySwitch)
{
    const auto g = empty_graph(4);
    const auto r = invariant_under_switch(Relation::parity(4), g, 0);
    EXPECT_TRUE(r.preserved() == false);
    EXPECT_TRUE(naive_identity_invariant(g, switch_graph(g, single(0)), 4) == false);
}

TEST(EqualityDefinability, Examples)
{
    const auto paley = build_paley(13).graph;
    EXPECT_FALSE(definable_from_equality(Relation::pairwise_distinct(3), paley));
    EXPECT_FALSE(definable_from_equality(Relation::formula("x0=x0"), paley));

    const auto e = definable_from_equality(Relation::edge(), path_graph(3));
    ASSERT_TRUE(e);
    EXPECT_EQ(equality_pattern(e->first), equality_pattern(e->second));
    EXPECT_NE(eval(Relation::edge(), e->first, path_graph(3)), eval(Relation::edge(), e->second, path_graph(3)));

    const auto r5 = Relation::parity(5);
    const auto w = definable_from_equality(r5, paley);
    ASSERT_TRUE(w);
    EXPECT_TRUE(pairwise_distinct(w->first) && pairwise_distinct(w->second));
    EXPECT_NE(parity_member(paley, w->first), parity_member(paley, w->second));
}

TEST(EqualityDefinability, EdgelessGraphMakesEdgeTrivial)
{
    EXPECT_FALSE(definable_from_equality(Relation::edge(), empty_graph(4)));
}

TEST(EqualityPattern, RestrictedGrowth)
{
    EXPECT_EQ(equality_pattern(Tuple{7, 3, 7, 9}), (std::vector<unsigned>{0, 1, 0, 2}));
    EXPECT_EQ(equality_pattern(Tuple{}), (std::vector<unsigned>{}));
}

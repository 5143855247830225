#include "sdg/independent_sets.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "sdg/graph.hpp"
#include "sdg/oracle.hpp"

namespace {

using sdg::ClassId;
using sdg::ClassSpec;
using sdg::Graph;
using sdg::VertexSet;

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

std::vector<std::vector<int>> as_vectors(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    for (const auto& s : sets) out.push_back(s.to_vector());
    return out;
}

TEST(DenseSubsets, PathAsDenseSide) {
    const Graph p3 = path(3);
    const auto subsets = enumerate_dense_side_is(p3, p3.vertices(), 3);
    EXPECT_EQ(as_vectors(subsets),
              (std::vector<std::vector<int>>{{}, {0}, {0, 2}, {1}, {2}}));
}

TEST(DenseSubsets, CliqueYieldsSingletons) {
    const Graph k3 = complete(3);
    const auto subsets = enumerate_dense_side_is(k3, k3.vertices(), 2);
    EXPECT_EQ(as_vectors(subsets), (std::vector<std::vector<int>>{{}, {0}, {1}, {2}}));
}

TEST(DenseSubsets, EmptyDenseSide) {
    const auto subsets = enumerate_dense_side_is(path(3), VertexSet(3), 4);
    EXPECT_EQ(as_vectors(subsets), (std::vector<std::vector<int>>{{}}));
}

TEST(DenseSubsets, ReportsIndependenceBoundViolationLazily) {
    const Graph p4 = path(4);  // {0, 2} is independent, so t = 2 is violated
    EXPECT_THROW(enumerate_dense_side_is(p4, p4.vertices(), 2), std::invalid_argument);
}

TEST(SparseMis, EdgelessSideIsItsOwnAnswer) {
    const Graph p4 = path(4);
    EXPECT_EQ(as_vectors(sparse_mis_enumerate(p4, VertexSet(4, {0, 3}), ClassId::edgeless())),
              (std::vector<std::vector<int>>{{0, 3}}));
    EXPECT_EQ(as_vectors(sparse_mis_enumerate(p4, VertexSet(4), ClassId::edgeless())),
              (std::vector<std::vector<int>>{{}}));
    EXPECT_THROW(sparse_mis_enumerate(p4, VertexSet(4, {0, 1}), ClassId::edgeless()),
                 std::invalid_argument);
    EXPECT_THROW(sparse_mis_enumerate(p4, VertexSet(4, {0, 3}), ClassId::bipartite()),
                 std::invalid_argument);
}

TEST(MaximalExtension, Examples) {
    const Graph p4 = path(4);
    EXPECT_EQ(maximal_extension(p4, VertexSet(4, {1}), VertexSet(4, {0, 3})).to_vector(),
              (std::vector<int>{1, 3}));
    EXPECT_EQ(maximal_extension(p4, VertexSet(4), VertexSet(4, {0, 2})).to_vector(),
              (std::vector<int>{0, 2}));
    EXPECT_EQ(maximal_extension(complete(2), VertexSet(2, {0}), VertexSet(2, {1})).to_vector(),
              (std::vector<int>{0}));
    EXPECT_THROW(maximal_extension(p4, VertexSet(4, {0, 1}), VertexSet(4)),
                 std::invalid_argument);
}

TEST(MaximalExtension, OutputIsIndependentAndMaximalWithinTheUnion) {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 60; ++round) {
        const int n = 3 + round % 10;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 5 < 2) g.add_edge(u, v);

        // r_s: greedy independent set; r_d: greedy independent subset of the rest
        VertexSet r_s(n), r_d(n);
        for (int v = 0; v < n; ++v)
            if (!g.neighbors(v).intersects(r_s)) r_s.insert(v);
        for (int v = n - 1; v >= 0; --v)
            if (!r_s.contains(v) && !g.neighbors(v).intersects(r_d)) r_d.insert(v);

        const VertexSet ext = maximal_extension(g, r_d, r_s);
        EXPECT_TRUE(is_independent_set(g, ext));
        for (int v : r_d) EXPECT_TRUE(ext.contains(v));
        for (int v : r_s | r_d) {
            if (!ext.contains(v)) EXPECT_TRUE(g.neighbors(v).intersects(ext));
        }
    }
}

TEST(IsMaximal, Examples) {
    const Graph p4 = path(4);
    EXPECT_TRUE(is_maximal_is(p4, VertexSet(4, {0, 2})));
    EXPECT_FALSE(is_maximal_is(p4, VertexSet(4, {0})));
    EXPECT_FALSE(is_maximal_is(p4, VertexSet(4, {0, 1})));
}

TEST(EnumerateMis, PathExample) {
    const auto collection = enumerate_maximal_is(path(4), ClassSpec::from_kl(1, 1));
    ASSERT_TRUE(collection.has_value());
    EXPECT_EQ(as_vectors(collection->sets),
              (std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(EnumerateMis, StarExample) {
    const auto collection = enumerate_maximal_is(star(3), ClassSpec::from_kl(1, 1));
    ASSERT_TRUE(collection.has_value());
    EXPECT_EQ(as_vectors(collection->sets),
              (std::vector<std::vector<int>>{{0}, {1, 2, 3}}));
}

TEST(EnumerateMis, FiveCycleExample) {
    const auto collection = enumerate_maximal_is(cycle(5), ClassSpec::from_kl(1, 2));
    ASSERT_TRUE(collection.has_value());
    EXPECT_EQ(as_vectors(collection->sets),
              (std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));
}

TEST(EnumerateMis, NotInClassVerdict) {
    EXPECT_FALSE(enumerate_maximal_is(cycle(5), ClassSpec::from_kl(1, 1)).has_value());
    EXPECT_THROW(enumerate_maximal_is(cycle(6), ClassSpec::from_kl(2, 1)),
                 std::invalid_argument);
}

TEST(EnumerateMis, AgreesWithOracleOnGeneratedGraphs) {
    for (int round = 0; round < 50; ++round) {
        const int l = 1 + round % 3;
        const int n = 6 + round % 6;
        std::vector<int> sizes(static_cast<std::size_t>(1 + l), n / (l + 1));
        sizes[0] += n % (l + 1);
        const auto made =
            sdg::generate_kl_graph(1, l, sizes, 0.3 + 0.2 * (round % 3), 7000 + round);
        const auto collection =
            enumerate_maximal_is(made.graph, ClassSpec::from_kl(1, l));
        ASSERT_TRUE(collection.has_value());
        EXPECT_EQ(collection->sets, sdg::oracle::bron_kerbosch_mis(made.graph));
        for (const auto& s : collection->sets) EXPECT_TRUE(is_maximal_is(made.graph, s));
    }
}

// Arbitrary graphs this time: the verdict must match the oracle's partition
// sweep, and whenever a partition exists the family must be complete.
TEST(EnumerateMis, VerdictAndFamilyMatchOracleOnArbitraryGraphs) {
    std::mt19937_64 rng(246);
    for (int round = 0; round < 120; ++round) {
        const int n = round % 9;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 1 + round % 8) g.add_edge(u, v);
        const int l = round % 3;
        const ClassSpec spec = ClassSpec::from_kl(1, l);
        const auto collection = enumerate_maximal_is(g, spec);
        const bool in_class = !sdg::oracle::brute_force_partitions(g, spec).empty();
        ASSERT_EQ(collection.has_value(), in_class);
        if (collection) EXPECT_EQ(collection->sets, sdg::oracle::bron_kerbosch_mis(g));
    }
}

TEST(EnumerateMis, ThreadedRunsMatchSequential) {
    const auto made = sdg::generate_kl_graph(1, 2, {20, 15, 15}, 0.35, 424242);
    const auto spec = ClassSpec::from_kl(1, 2);
    const auto sequential = enumerate_maximal_is(made.graph, spec, 1);
    const auto threaded = enumerate_maximal_is(made.graph, spec, 4);
    ASSERT_TRUE(sequential.has_value());
    ASSERT_TRUE(threaded.has_value());
    EXPECT_EQ(sequential->sets, threaded->sets);
}

TEST(HopcroftKarp, Examples) {
    const Graph k33 = complete_bipartite(3, 3);
    const auto coloring = is_bipartite(k33);
    EXPECT_EQ(hopcroft_karp(k33, *coloring.coloring).size, 3);

    const Graph p4 = path(4);
    EXPECT_EQ(hopcroft_karp(p4, *is_bipartite(p4).coloring).size, 2);

    const Graph edgeless(4);
    EXPECT_EQ(hopcroft_karp(edgeless, *is_bipartite(edgeless).coloring).size, 0);
}

TEST(HopcroftKarp, MatchedPairsAreDisjointEdges) {
    std::mt19937_64 rng(66);
    for (int round = 0; round < 40; ++round) {
        const auto made = sdg::generate_kl_graph(
            2, 0, {2 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 6)},
            0.4, 8000 + round);
        const auto coloring = is_bipartite(made.graph);
        ASSERT_TRUE(coloring);
        const auto matching = hopcroft_karp(made.graph, *coloring.coloring);
        std::set<int> used;
        for (const auto& [u, v] : matching.matched_pairs) {
            EXPECT_TRUE(made.graph.has_edge(u, v));
            EXPECT_TRUE(used.insert(u).second);
            EXPECT_TRUE(used.insert(v).second);
        }
    }
}

TEST(HopcroftKarp, RejectsImproperColoring) {
    sdg::TwoColoring bad;
    bad.side.assign(2, sdg::Side::left);
    EXPECT_THROW(hopcroft_karp(complete(2), bad), std::invalid_argument);
}

TEST(BipartiteMaxIs, Examples) {
    const Graph c6 = cycle(6);
    EXPECT_EQ(bipartite_max_is(c6, *is_bipartite(c6).coloring).size(), 3);

    const Graph k33 = complete_bipartite(3, 3);
    EXPECT_EQ(bipartite_max_is(k33, *is_bipartite(k33).coloring).size(), 3);

    const Graph p4 = path(4);
    const VertexSet result = bipartite_max_is(p4, *is_bipartite(p4).coloring);
    EXPECT_EQ(result.size(), 2);
    EXPECT_TRUE(is_independent_set(p4, result));
}

TEST(BipartiteMaxIs, KonigIdentityOnRandomBipartiteGraphs) {
    for (int round = 0; round < 50; ++round) {
        const int a = 2 + round % 9, b = 2 + (round / 3) % 9;
        const auto made = sdg::generate_kl_graph(2, 0, {a, b}, 0.15 + 0.1 * (round % 6),
                                                 9000 + round);
        const auto coloring = is_bipartite(made.graph);
        ASSERT_TRUE(coloring);
        const auto independent = bipartite_max_is(made.graph, *coloring.coloring);
        const auto matching = hopcroft_karp(made.graph, *coloring.coloring);
        EXPECT_TRUE(is_independent_set(made.graph, independent));
        EXPECT_EQ(independent.size() + matching.size, made.graph.order());
    }
}

TEST(MaxIs, Examples) {
    const auto p4_result = max_is(path(4), ClassSpec::from_kl(2, 0));
    ASSERT_TRUE(p4_result.has_value());
    EXPECT_EQ(p4_result->set.size(), 2);

    const auto c5_result = max_is(cycle(5), ClassSpec::from_kl(1, 2));
    ASSERT_TRUE(c5_result.has_value());
    EXPECT_EQ(c5_result->set.size(), 2);

    // six-cycle plus a disjoint clique of four
    Graph g(10);
    for (const auto& [u, v] : cycle(6).edges()) g.add_edge(u, v);
    for (int u = 6; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) g.add_edge(u, v);
    const auto mixed = max_is(g, ClassSpec::from_kl(2, 3));
    ASSERT_TRUE(mixed.has_value());
    EXPECT_EQ(mixed->set.size(), 4);
    EXPECT_TRUE(is_independent_set(g, mixed->set));
}

TEST(MaxIs, NotInClassVerdict) {
    EXPECT_FALSE(max_is(cycle(5), ClassSpec::from_kl(1, 1)).has_value());
}

TEST(MaxIs, MatchesBruteForceOnGeneratedGraphs) {
    for (int round = 0; round < 50; ++round) {
        const int l = round % 3;
        const int n = 8 + round % 6;
        std::vector<int> sizes(static_cast<std::size_t>(2 + l), n / (l + 2));
        sizes[0] += n % (l + 2);
        const auto made =
            sdg::generate_kl_graph(2, l, sizes, 0.25 + 0.2 * (round % 3), 10000 + round);
        const auto result = max_is(made.graph, ClassSpec::from_kl(2, l));
        ASSERT_TRUE(result.has_value());
        EXPECT_TRUE(is_independent_set(made.graph, result->set));
        EXPECT_EQ(result->set.size(), sdg::oracle::brute_force_alpha(made.graph));
        for (int v : result->from_dense) EXPECT_TRUE(result->set.contains(v));
    }
}

// Maximal cliques of g are the maximal independent sets of its complement.
TEST(ComplementDuality, CliquesComeFromTheComplementPipeline) {
    std::mt19937_64 rng(123);
    for (int round = 0; round < 30; ++round) {
        const int l = 1 + round % 2;
        const int n = 6 + round % 4;
        std::vector<int> sizes(static_cast<std::size_t>(1 + l), n / (l + 1));
        sizes[0] += n % (l + 1);
        const auto made = sdg::generate_kl_graph(1, l, sizes, 0.4, 11000 + round);
        const Graph g = complement(made.graph);

        const auto collection =
            enumerate_maximal_is(complement(g), ClassSpec::from_kl(1, l));
        ASSERT_TRUE(collection.has_value());

        // clique oracle: all maximal cliques by subset sweep
        std::vector<VertexSet> cliques;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.insert(v);
            if (!is_clique(g, s)) continue;
            bool extendable = false;
            for (int v = 0; v < n && !extendable; ++v) {
                if (s.contains(v)) continue;
                VertexSet grown = s;
                grown.insert(v);
                extendable = is_clique(g, grown);
            }
            if (!extendable) cliques.push_back(std::move(s));
        }
        std::sort(cliques.begin(), cliques.end(), VertexSet::canonical_less);
        EXPECT_EQ(collection->sets, cliques);
    }
}

}  // namespace

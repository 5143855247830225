#include "sdg/applications.hpp"

#include <random>

#include "gtest/gtest.h"
#include "sdg/graph.hpp"
#include "sdg/oracle.hpp"

namespace {

using sdg::ClassSpec;
using sdg::ConflictInstance;
using sdg::ConflictStatus;
using sdg::Graph;
using sdg::VertexSet;
using sdg::WellCoveredStatus;

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

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

ConflictInstance make_instance(int n, const std::vector<std::tuple<int, int, double>>& edges,
                               const std::vector<std::pair<int, int>>& conflicts) {
    ConflictInstance inst;
    inst.base.graph = Graph(n);
    for (const auto& [u, v, w] : edges) {
        inst.base.graph.add_edge(u, v);
        inst.base.edge_list.emplace_back(u, v);
        inst.base.weights.push_back(w);
    }
    inst.conflict_graph = Graph(static_cast<int>(edges.size()));
    for (const auto& [a, b] : conflicts) inst.conflict_graph.add_edge(a, b);
    return inst;
}

// triangle a-b-c with weights ab=1, bc=2, ac=3 and one conflict ab/bc
ConflictInstance triangle_instance() {
    return make_instance(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}}, {{0, 1}});
}

TEST(WellCovered, Examples) {
    const auto c5 = is_well_covered(cycle(5), ClassSpec::from_kl(1, 2));
    EXPECT_EQ(c5.status, WellCoveredStatus::well_covered);
    EXPECT_EQ(c5.common_size, 2);

    const auto claw = is_well_covered(star(3), ClassSpec::from_kl(1, 1));
    EXPECT_EQ(claw.status, WellCoveredStatus::not_well_covered);
    ASSERT_TRUE(claw.witness_pair.has_value());
    EXPECT_EQ(claw.witness_pair->first.size(), 1);
    EXPECT_EQ(claw.witness_pair->second.size(), 3);
    EXPECT_TRUE(is_maximal_is(star(3), claw.witness_pair->first));
    EXPECT_TRUE(is_maximal_is(star(3), claw.witness_pair->second));

    const auto p4 = is_well_covered(path(4), ClassSpec::from_kl(1, 1));
    EXPECT_EQ(p4.status, WellCoveredStatus::well_covered);
    EXPECT_EQ(p4.common_size, 2);

    EXPECT_EQ(is_well_covered(cycle(5), ClassSpec::from_kl(1, 1)).status,
              WellCoveredStatus::not_in_class);
}

TEST(WellCovered, AgreesWithBruteForceOnGeneratedGraphs) {
    for (int round = 0; round < 50; ++round) {
        const int l = 1 + round % 3;
        const int n = 5 + round % 7;
        std::vector<int> sizes(static_cast<std::size_t>(1 + l), n / (l + 1));
        sizes[0] += n % (l + 1);
        const auto made =
            sdg::generate_kl_graph(1, l, sizes, 0.2 + 0.2 * (round % 4), 12000 + round);
        const auto fast = is_well_covered(made.graph, ClassSpec::from_kl(1, l));
        const auto slow = sdg::oracle::brute_force_well_covered(made.graph);
        ASSERT_NE(fast.status, WellCoveredStatus::not_in_class);
        EXPECT_EQ(fast.status, slow.status);
        if (fast.status == WellCoveredStatus::well_covered)
            EXPECT_EQ(fast.common_size, slow.common_size);
        else
            EXPECT_NE(fast.witness_pair->first.size(), fast.witness_pair->second.size());
    }
}

TEST(ConflictParse, RoundTripsTheTriangleInstance) {
    const auto inst = sdg::parse_conflict_instance(
        "3 3\n0 1 1\n1 2 2\n0 2 3\nconflicts\n0 1\n");
    EXPECT_EQ(inst.base.graph.order(), 3);
    EXPECT_EQ(inst.base.weights, (std::vector<double>{1.0, 2.0, 3.0}));
    EXPECT_EQ(inst.conflict_graph.order(), 3);
    EXPECT_TRUE(inst.conflict_graph.has_edge(0, 1));
}

TEST(ConflictParse, Errors) {
    using sdg::parse_error;
    EXPECT_THROW(sdg::parse_conflict_instance("2 1\n0 1 -2\nconflicts\n"), parse_error);
    EXPECT_THROW(sdg::parse_conflict_instance("2 1\n0 1 1\n"), parse_error);  // no section
    EXPECT_THROW(sdg::parse_conflict_instance("2 1\n0 1 1\nconflicts\n0 0\n"), parse_error);
    EXPECT_THROW(sdg::parse_conflict_instance("2 1\n0 1 1\nconflicts\n0 5\n"), parse_error);
    EXPECT_THROW(sdg::parse_conflict_instance("2 2\n0 1 1\n1 0 2\nconflicts\n"), parse_error);
    EXPECT_THROW(sdg::parse_conflict_instance("2 1\n1 1 1\nconflicts\n"), parse_error);
}

TEST(ConflictMst, TriangleExample) {
    const auto result = conflict_free_mst(triangle_instance(), ClassSpec::from_kl(1, 1));
    ASSERT_EQ(result.status, ConflictStatus::feasible);
    EXPECT_EQ(result.solution->objective, 4.0);
    EXPECT_EQ(result.solution->chosen_edges, (std::vector<int>{0, 2}));  // ab and ac
    EXPECT_EQ(result.solution->certificate.to_vector(), (std::vector<int>{0, 2}));
}

TEST(ConflictMst, NoConflictsMeansPlainMst) {
    auto inst = triangle_instance();
    inst.conflict_graph = Graph(3);
    const auto result = conflict_free_mst(inst, ClassSpec::from_kl(1, 1));
    ASSERT_EQ(result.status, ConflictStatus::feasible);
    EXPECT_EQ(result.solution->objective, 3.0);  // edges ab + bc
    EXPECT_EQ(result.solution->chosen_edges, (std::vector<int>{0, 1}));
}

TEST(ConflictMst, ConflictingPathEdgesAreInfeasible) {
    const auto inst = make_instance(3, {{0, 1, 1.0}, {1, 2, 1.0}}, {{0, 1}});
    EXPECT_EQ(conflict_free_mst(inst, ClassSpec::from_kl(1, 1)).status,
              ConflictStatus::infeasible);
}

TEST(ConflictMst, DisconnectedBaseIsImmediatelyInfeasible) {
    const auto inst = make_instance(4, {{0, 1, 1.0}, {2, 3, 1.0}}, {});
    EXPECT_EQ(conflict_free_mst(inst, ClassSpec::from_kl(1, 1)).status,
              ConflictStatus::infeasible);
}

TEST(ConflictMst, NotInClassWhenConflictGraphLacksPartitions) {
    // conflict graph is a five-cycle, which has no split partition
    const auto inst = make_instance(
        6, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(conflict_free_mst(inst, ClassSpec::from_kl(1, 1)).status,
              ConflictStatus::not_in_class);
}

TEST(ConflictMst, SolutionsPassPostHocChecks) {
    std::mt19937_64 rng(321);
    for (int round = 0; round < 40; ++round) {
        const int n = 4 + round % 4;
        Graph g(n);
        std::vector<std::tuple<int, int, double>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 7) edges.emplace_back(u, v, 1.0 + static_cast<double>(rng() % 9));
        if (edges.empty()) continue;
        const int m = static_cast<int>(edges.size());
        const auto planted = sdg::generate_kl_graph(1, 1, {m - m / 2, m / 2},
                                                    0.25, 13000 + round);
        ConflictInstance inst = make_instance(n, edges, {});
        inst.conflict_graph = planted.graph;

        const auto result = conflict_free_mst(inst, ClassSpec::from_kl(1, 1));
        if (result.status != ConflictStatus::feasible) continue;
        const auto& sol = *result.solution;
        double total = 0.0;
        for (int e : sol.chosen_edges) {
            EXPECT_TRUE(sol.certificate.contains(e));
            total += inst.base.weights[static_cast<std::size_t>(e)];
        }
        EXPECT_EQ(total, sol.objective);
        VertexSet chosen(m);
        for (int e : sol.chosen_edges) chosen.insert(e);
        EXPECT_TRUE(is_independent_set(inst.conflict_graph, chosen));
    }
}

// extra conflicts between the planted sides keep the conflict graph split
TEST(ConflictMst, AddingConflictsNeverImprovesTheObjective) {
    std::mt19937_64 rng(654);
    for (int round = 0; round < 25; ++round) {
        const int n = 5;
        std::vector<std::tuple<int, int, double>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 8) edges.emplace_back(u, v, 1.0 + static_cast<double>(rng() % 9));
        if (edges.size() < 2) continue;
        const int m = static_cast<int>(edges.size());
        const int split = m / 2;
        const auto planted =
            sdg::generate_kl_graph(1, 1, {m - split, split}, 0.2, 14000 + round);

        ConflictInstance inst = make_instance(n, edges, {});
        inst.conflict_graph = planted.graph;
        const auto before = conflict_free_mst(inst, ClassSpec::from_kl(1, 1));

        // add one missing sparse-to-clique conflict, if any
        ConflictInstance harder = inst;
        bool added = false;
        for (int a : planted.parts[0]) {
            for (int b : planted.parts[1])
                if (!harder.conflict_graph.has_edge(a, b)) {
                    harder.conflict_graph.add_edge(a, b);
                    added = true;
                    break;
                }
            if (added) break;
        }
        if (!added) continue;
        const auto after = conflict_free_mst(harder, ClassSpec::from_kl(1, 1));

        ASSERT_NE(before.status, ConflictStatus::not_in_class);
        ASSERT_NE(after.status, ConflictStatus::not_in_class);
        if (before.status == ConflictStatus::infeasible) {
            EXPECT_EQ(after.status, ConflictStatus::infeasible);
        } else if (after.status == ConflictStatus::feasible) {
            EXPECT_GE(after.solution->objective, before.solution->objective);
        }
    }
}

TEST(ConflictPath, NoConflictsMeansPlainShortestPath) {
    const auto inst = make_instance(
        4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 5.0}}, {});
    const auto result = conflict_free_shortest_path(inst, 0, 3, ClassSpec::from_kl(1, 1));
    ASSERT_EQ(result.status, ConflictStatus::feasible);
    EXPECT_EQ(result.solution->objective, 3.0);
    EXPECT_EQ(result.solution->chosen_edges, (std::vector<int>{0, 1, 2}));
}

TEST(ConflictPath, FourCycleDetourExample) {
    // unit square a-b-c-d, path a->c, conflict between ab and bc forces a-d-c
    const auto inst = make_instance(
        4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}}, {{0, 1}});
    const auto result = conflict_free_shortest_path(inst, 0, 2, ClassSpec::from_kl(1, 1));
    ASSERT_EQ(result.status, ConflictStatus::feasible);
    EXPECT_EQ(result.solution->objective, 2.0);
    EXPECT_EQ(result.solution->chosen_edges, (std::vector<int>{2, 3}));
}

TEST(ConflictPath, SourceEqualsTarget) {
    const auto result =
        conflict_free_shortest_path(triangle_instance(), 1, 1, ClassSpec::from_kl(1, 1));
    ASSERT_EQ(result.status, ConflictStatus::feasible);
    EXPECT_EQ(result.solution->objective, 0.0);
    EXPECT_TRUE(result.solution->chosen_edges.empty());
}

TEST(ConflictPath, UnreachableTargetIsInfeasible) {
    const auto inst = make_instance(3, {{0, 1, 1.0}}, {});
    EXPECT_EQ(conflict_free_shortest_path(inst, 0, 2, ClassSpec::from_kl(1, 1)).status,
              ConflictStatus::infeasible);
}

TEST(ConflictPath, RejectsNegativeWeightsAndBadEndpoints) {
    auto inst = triangle_instance();
    inst.base.weights[1] = -1.0;
    EXPECT_THROW(conflict_free_shortest_path(inst, 0, 2, ClassSpec::from_kl(1, 1)),
                 std::invalid_argument);
    EXPECT_THROW(conflict_free_shortest_path(triangle_instance(), 0, 9,
                                             ClassSpec::from_kl(1, 1)),
                 std::out_of_range);
}

}  // namespace

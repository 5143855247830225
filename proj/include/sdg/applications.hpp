#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdg/graph.hpp"
#include "sdg/graph_io.hpp"
#include "sdg/independent_sets.hpp"
#include "sdg/partition.hpp"
#include "sdg/recognizers.hpp"

namespace sdg {

enum class WellCoveredStatus { well_covered, not_well_covered, not_in_class };

struct WellCoveredVerdict {
    WellCoveredStatus status = WellCoveredStatus::not_in_class;
    int common_size = -1;  // set when well covered
    // two maximal independent sets of different sizes when not well covered
    std::optional<std::pair<VertexSet, VertexSet>> witness_pair;
};

// Decides whether every maximal independent set of g has the same size,
// without needing any partition in the input: the enumeration pipeline finds
// one itself or certifies there is none.
inline WellCoveredVerdict is_well_covered(const Graph& g, const ClassSpec& spec) {
    auto collection = enumerate_maximal_is(g, spec);
    if (!collection) return {WellCoveredStatus::not_in_class, -1, std::nullopt};

    const auto& sets = collection->sets;
    const int first_size = sets.empty() ? 0 : sets.front().size();
    for (const auto& s : sets)
        if (s.size() != first_size)
            return {WellCoveredStatus::not_well_covered, -1,
                    std::make_pair(sets.front(), s)};
    return {WellCoveredStatus::well_covered, first_size, std::nullopt};
}

// Base instance for conflict-constrained problems: a simple graph with a
// nonnegative weight per edge, edges indexed by their position in edge_list.
struct WeightedGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_list;
    std::vector<double> weights;
};

// A weighted base graph plus a conflict graph whose vertices are base-edge
// indices; conflict edges mark pairs forbidden to appear in one solution.
struct ConflictInstance {
    WeightedGraph base;
    Graph conflict_graph;
};

// Text format: "n m" header, m lines "u v w" (0-based endpoints, weight
// w >= 0), then a line "conflicts" followed by pairs of edge indices.
inline ConflictInstance parse_conflict_instance(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error(1, "missing \"n m\" header");
    const auto header = detail::parse_ints(lines[0], 2, "n m");
    const long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw parse_error(lines[0].number, "negative count in header");

    ConflictInstance inst;
    inst.base.graph = Graph(static_cast<int>(n));
    std::set<std::pair<int, int>> seen;
    std::size_t next_line = 1;
    for (long long e = 0; e < m; ++e, ++next_line) {
        if (next_line >= lines.size())
            throw parse_error(lines.back().number, "expected " + std::to_string(m) +
                                                       " weighted edge lines");
        const auto& line = lines[next_line];
        std::istringstream iss(line.text);
        long long u, v;
        double w;
        if (!(iss >> u >> v >> w)) throw parse_error(line.number, "expected \"u v w\"");
        std::string tail;
        if (iss >> tail) throw parse_error(line.number, "trailing content \"" + tail + "\"");
        detail::check_vertex_token(line, u, 0, n - 1);
        detail::check_vertex_token(line, v, 0, n - 1);
        if (u == v) throw parse_error(line.number, "self-loop at vertex " + std::to_string(u));
        if (!(w >= 0.0)) throw parse_error(line.number, "negative weight");
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw parse_error(line.number, "duplicate edge " + std::to_string(u) + "-" +
                                               std::to_string(v));
        inst.base.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
        inst.base.edge_list.emplace_back(static_cast<int>(u), static_cast<int>(v));
        inst.base.weights.push_back(w);
    }

    auto is_conflicts_header = [&]() {
        if (next_line >= lines.size()) return false;
        std::istringstream iss(lines[next_line].text);
        std::string word, tail;
        return (iss >> word) && word == "conflicts" && !(iss >> tail);
    };
    if (!is_conflicts_header())
        throw parse_error(next_line < lines.size() ? lines[next_line].number
                                                   : lines.back().number,
                          "expected \"conflicts\" section");
    ++next_line;

    inst.conflict_graph = Graph(static_cast<int>(m));
    for (; next_line < lines.size(); ++next_line) {
        const auto& line = lines[next_line];
        const auto pair = detail::parse_ints(line, 2, "edge-index pair");
        for (long long idx : pair)
            if (idx < 0 || idx >= m)
                throw parse_error(line.number,
                                  "edge index " + std::to_string(idx) + " out of range");
        if (pair[0] == pair[1])
            throw parse_error(line.number, "edge cannot conflict with itself");
        inst.conflict_graph.add_edge(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
    }
    return inst;
}

enum class ConflictStatus { feasible, infeasible, not_in_class };

struct ConflictSolution {
    std::vector<int> chosen_edges;  // base-edge indices, ascending
    double objective = 0.0;
    VertexSet certificate;  // the maximal conflict-independent set hosting the solution
};

struct ConflictResult {
    ConflictStatus status = ConflictStatus::infeasible;
    std::optional<ConflictSolution> solution;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen(g.order());
    seen.insert(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.size() == g.order();
}

// Kruskal over the allowed edge indices; nullopt when they do not span.
inline std::optional<std::pair<std::vector<int>, double>> spanning_tree_on(
    const WeightedGraph& base, const VertexSet& allowed) {
    std::vector<int> order = allowed.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double wa = base.weights[static_cast<std::size_t>(a)];
        const double wb = base.weights[static_cast<std::size_t>(b)];
        return wa < wb || (wa == wb && a < b);
    });
    UnionFind uf(base.graph.order());
    std::vector<int> tree;
    double total = 0.0;
    for (int e : order) {
        const auto& [u, v] = base.edge_list[static_cast<std::size_t>(e)];
        if (uf.unite(u, v)) {
            tree.push_back(e);
            total += base.weights[static_cast<std::size_t>(e)];
        }
    }
    if (static_cast<int>(tree.size()) != base.graph.order() - 1 && base.graph.order() > 0)
        return std::nullopt;
    std::sort(tree.begin(), tree.end());
    return std::make_pair(std::move(tree), total);
}

// Dijkstra restricted to the allowed edge indices; returns the path's edge
// indices and weight, or nullopt when target is unreachable.
inline std::optional<std::pair<std::vector<int>, double>> shortest_path_on(
    const WeightedGraph& base, const VertexSet& allowed, int source, int target) {
    const int n = base.graph.order();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int e : allowed) {
        const auto& [u, v] = base.edge_list[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(u)].emplace_back(v, e);
        adj[static_cast<std::size_t>(v)].emplace_back(u, e);
    }

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    std::vector<int> via_edge(static_cast<std::size_t>(n), -1);
    std::vector<int> via_vertex(static_cast<std::size_t>(n), -1);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(u)]) continue;
        for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
            const double nd = d + base.weights[static_cast<std::size_t>(e)];
            if (nd < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = nd;
                via_edge[static_cast<std::size_t>(v)] = e;
                via_vertex[static_cast<std::size_t>(v)] = u;
                heap.emplace(nd, v);
            }
        }
    }
    if (dist[static_cast<std::size_t>(target)] == kInf) return std::nullopt;
    std::vector<int> path;
    for (int v = target; v != source; v = via_vertex[static_cast<std::size_t>(v)])
        path.push_back(via_edge[static_cast<std::size_t>(v)]);
    std::sort(path.begin(), path.end());
    return std::make_pair(std::move(path), dist[static_cast<std::size_t>(target)]);
}

inline void check_conflict_instance(const ConflictInstance& inst) {
    if (inst.conflict_graph.order() != static_cast<int>(inst.base.edge_list.size()))
        throw std::invalid_argument("conflict graph order must equal the base edge count");
    for (double w : inst.base.weights)
        if (!(w >= 0.0)) throw std::invalid_argument("edge weights must be nonnegative");
}

// Runs `solve` on the restriction to each maximal conflict-independent set C,
// keeping the smallest objective; ties go to the canonically first C.
// Restricting to exactly C is enough: every edge outside a maximal C
// conflicts with something in C, and any solution inside a feasible edge set
// stays inside some maximal independent superset of it.
template <typename Solve>
inline ConflictResult best_over_certificates(const ConflictInstance& inst, const ClassSpec& spec,
                                             Solve solve) {
    auto enumeration = enumerate_maximal_is(inst.conflict_graph, spec);
    if (!enumeration) return {ConflictStatus::not_in_class, std::nullopt};

    std::optional<ConflictSolution> best;
    for (const auto& certificate : enumeration->sets) {
        auto candidate = solve(certificate);
        if (!candidate) continue;
        if (!best || candidate->second < best->objective)
            best = ConflictSolution{std::move(candidate->first), candidate->second, certificate};
    }
    if (!best) return {ConflictStatus::infeasible, std::nullopt};
    return {ConflictStatus::feasible, std::move(best)};
}

}  // namespace detail

// Minimum-weight spanning tree whose edge set is independent in the conflict
// graph, found by solving the plain problem on each restriction.
inline ConflictResult conflict_free_mst(const ConflictInstance& inst, const ClassSpec& spec) {
    detail::check_conflict_instance(inst);
    if (!detail::is_connected(inst.base.graph)) return {ConflictStatus::infeasible, std::nullopt};
    return detail::best_over_certificates(inst, spec, [&](const VertexSet& certificate) {
        return detail::spanning_tree_on(inst.base, certificate);
    });
}

// Minimum-weight source-target path avoiding conflicting edge pairs.
inline ConflictResult conflict_free_shortest_path(const ConflictInstance& inst, int source,
                                                  int target, const ClassSpec& spec) {
    detail::check_conflict_instance(inst);
    const int n = inst.base.graph.order();
    if (source < 0 || source >= n || target < 0 || target >= n)
        throw std::out_of_range("source or target outside the base graph");
    return detail::best_over_certificates(inst, spec, [&](const VertexSet& certificate) {
        return detail::shortest_path_on(inst.base, certificate, source, target);
    });
}

}  // namespace sdg

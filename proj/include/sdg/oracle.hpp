#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sdg/applications.hpp"
#include "sdg/graph.hpp"
#include "sdg/partition.hpp"
#include "sdg/recognizers.hpp"

// Exponential-time ground truth used to validate the polynomial pipelines at
// desk scale. These routines share the domain types with the rest of the
// library but none of its algorithmic code paths, so an agreement between the
// two is evidence, not tautology. Intended sizes are n <= ~20 (subset
// searches) and n <= ~16 (bipartition sweeps); limits are soft.
namespace sdg::oracle {

namespace detail {

inline bool edgeless_inside(const Graph& g, const VertexSet& s) {
    for (const auto& [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) return false;
    return true;
}

inline bool two_colorable_inside(const Graph& g, const VertexSet& s) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int root : s) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (!s.contains(w)) continue;
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Ascending search for an independent k-subset of `within`, existence only.
inline bool has_independent_subset(const Graph& g, const VertexSet& within, int k) {
    if (k == 0) return true;
    auto rec = [&](auto&& self, const VertexSet& candidates, int needed) -> bool {
        if (needed == 0) return true;
        if (candidates.size() < needed) return false;
        for (int v : candidates) {
            VertexSet rest = candidates - g.neighbors(v);
            rest.erase_below(v + 1);
            if (self(self, rest, needed - 1)) return true;
        }
        return false;
    };
    return rec(rec, within, k);
}

inline bool side_accepted(const Graph& g, const VertexSet& side, const ClassId& cls) {
    switch (cls.kind) {
        case GraphClass::edgeless: return edgeless_inside(g, side);
        case GraphClass::bipartite: return two_colorable_inside(g, side);
        case GraphClass::kbar_free: return !has_independent_subset(g, side, cls.t);
    }
    return false;
}

// Branch and bound for a maximum independent set. Isolated and degree-one
// vertices are always safe to take; once every remaining degree is exactly
// two the leftover components are cycles and close in constant work. The
// bound charges one non-member per greedily matched edge.
struct MaxIsSearch {
    const Graph& g;
    VertexSet best;

    explicit MaxIsSearch(const Graph& graph) : g(graph), best(graph.order()) {}

    int degree_in(int v, const VertexSet& pool) const {
        return (g.neighbors(v) & pool).size();
    }

    int matching_bound(const VertexSet& pool) const {
        VertexSet free = pool;
        int matched = 0;
        for (int v : pool) {
            if (!free.contains(v)) continue;
            VertexSet options = g.neighbors(v) & free;
            options.erase_below(v + 1);
            int partner = options.first();
            if (partner != -1) {
                free.erase(v);
                free.erase(partner);
                ++matched;
            }
        }
        return pool.size() - matched;
    }

    // Takes alternate vertices around each leftover cycle.
    void close_cycles(VertexSet pool, VertexSet& chosen) const {
        while (!pool.empty()) {
            const int start = pool.first();
            std::vector<int> cycle{start};
            pool.erase(start);
            // erased vertices drop out of the pool, so the walk cannot back up
            int at = (g.neighbors(start) & pool).first();
            while (at != -1) {
                cycle.push_back(at);
                pool.erase(at);
                at = (g.neighbors(at) & pool).first();
            }
            const std::size_t take = cycle.size() / 2;
            for (std::size_t i = 0; i < take; ++i) chosen.insert(cycle[2 * i]);
        }
    }

    void run(VertexSet pool, VertexSet chosen) {
        // reductions
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (int v : pool) {
                const int deg = degree_in(v, pool);
                if (deg == 0) {
                    chosen.insert(v);
                    pool.erase(v);
                    reduced = true;
                    break;
                }
                if (deg == 1) {
                    chosen.insert(v);
                    pool -= g.neighbors(v);
                    pool.erase(v);
                    reduced = true;
                    break;
                }
            }
        }
        if (pool.empty()) {
            if (chosen.size() > best.size()) best = chosen;
            return;
        }

        int branch = -1, branch_deg = -1;
        for (int v : pool) {
            const int deg = degree_in(v, pool);
            if (deg > branch_deg) {
                branch = v;
                branch_deg = deg;
            }
        }
        if (branch_deg <= 2) {
            close_cycles(pool, chosen);
            if (chosen.size() > best.size()) best = chosen;
            return;
        }

        if (chosen.size() + matching_bound(pool) <= best.size()) return;

        VertexSet with = pool - g.neighbors(branch);
        with.erase(branch);
        VertexSet taken = chosen;
        taken.insert(branch);
        run(std::move(with), std::move(taken));

        pool.erase(branch);
        run(std::move(pool), std::move(chosen));
    }
};

}  // namespace detail

// All maximal independent sets via Bron-Kerbosch with pivoting over the
// complement adjacency, in canonical order.
inline std::vector<VertexSet> bron_kerbosch_mis(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> non_neighbors;
    non_neighbors.reserve(static_cast<std::size_t>(n));
    const VertexSet all = g.vertices();
    for (int v = 0; v < n; ++v) {
        VertexSet nn = all - g.neighbors(v);
        nn.erase(v);
        non_neighbors.push_back(std::move(nn));
    }

    std::vector<VertexSet> out;
    VertexSet current(n);
    auto rec = [&](auto&& self, VertexSet p, VertexSet x) -> void {
        if (p.empty() && x.empty()) {
            out.push_back(current);
            return;
        }
        int pivot = -1, pivot_score = -1;
        for (int u : p | x) {
            const int score = (p & non_neighbors[static_cast<std::size_t>(u)]).size();
            if (score > pivot_score) {
                pivot = u;
                pivot_score = score;
            }
        }
        const VertexSet expand = p - non_neighbors[static_cast<std::size_t>(pivot)];
        for (int v : expand) {
            current.insert(v);
            self(self, p & non_neighbors[static_cast<std::size_t>(v)],
                 x & non_neighbors[static_cast<std::size_t>(v)]);
            current.erase(v);
            p.erase(v);
            x.insert(v);
        }
    };
    rec(rec, all, VertexSet(n));

    std::sort(out.begin(), out.end(), VertexSet::canonical_less);
    return out;
}

// All 2^n ordered bipartitions filtered through oracle-local membership
// tests, in canonical order.
inline std::vector<SparseDensePartition> brute_force_partitions(const Graph& g,
                                                                const ClassSpec& spec) {
    const int n = g.order();
    if (n > 30) throw std::invalid_argument("bipartition sweep limited to n <= 30");
    std::vector<SparseDensePartition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet sparse(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) sparse.insert(v);
        VertexSet dense = sparse.complement();
        if (detail::side_accepted(g, sparse, spec.sparse) &&
            detail::side_accepted(g, dense, spec.dense))
            out.push_back({std::move(sparse), std::move(dense)});
    }
    std::sort(out.begin(), out.end(),
              [](const SparseDensePartition& a, const SparseDensePartition& b) {
                  return VertexSet::canonical_less(a.sparse_side, b.sparse_side);
              });
    return out;
}

// A maximum independent set by branch and bound; the size is exact.
inline VertexSet brute_force_max_is(const Graph& g) {
    detail::MaxIsSearch search(g);
    search.run(g.vertices(), VertexSet(g.order()));
    return search.best;
}

inline int brute_force_alpha(const Graph& g) { return brute_force_max_is(g).size(); }

// Verdict from the full maximal-set family; no class assumption, so the
// not-in-class outcome never occurs here.
inline WellCoveredVerdict brute_force_well_covered(const Graph& g) {
    const auto sets = bron_kerbosch_mis(g);
    const int first_size = sets.empty() ? 0 : sets.front().size();
    for (const auto& s : sets)
        if (s.size() != first_size)
            return {WellCoveredStatus::not_well_covered, -1,
                    std::make_pair(sets.front(), s)};
    return {WellCoveredStatus::well_covered, first_size, std::nullopt};
}

// Backtracking proper-coloring check with k colors. The first vertex is
// pinned to color 0; two-colorable graphs short-circuit for k >= 2.
inline bool k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("color count must be nonnegative");
    const int n = g.order();
    if (n == 0) return true;
    if (k == 0) return false;
    if (k >= 2 && detail::two_colorable_inside(g, g.vertices())) return true;
    if (k == 1) return is_edgeless(g);

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = g.neighbors(a).size(), db = g.neighbors(b).size();
        return da > db || (da == db && a < b);
    });

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        const int v = order[static_cast<std::size_t>(idx)];
        const int limit = idx == 0 ? 1 : k;
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, idx + 1)) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace sdg::oracle

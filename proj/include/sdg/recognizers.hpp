#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdg/graph.hpp"

namespace sdg {

// Hereditary graph classes usable as the sides of a sparse-dense pair.
// KbarFree(t) is the class with independence number below t.
enum class GraphClass { edgeless, bipartite, kbar_free };

struct ClassId {
    GraphClass kind = GraphClass::edgeless;
    int t = 0;  // only meaningful for kbar_free, always >= 1 there

    static ClassId edgeless() { return {GraphClass::edgeless, 0}; }
    static ClassId bipartite() { return {GraphClass::bipartite, 0}; }
    static ClassId kbar_free(int t) {
        if (t < 1) throw std::invalid_argument("independence bound t must be at least 1");
        return {GraphClass::kbar_free, t};
    }

    bool operator==(const ClassId&) const = default;
};

// A certified (sparse class, dense class) pair. c bounds how many vertices
// any sparse member can share with any dense member: an independent set
// inside a graph with independence number < t has at most t-1 vertices, and
// a bipartite member contributes at most t-1 per color class.
struct ClassSpec {
    ClassId sparse;
    ClassId dense;
    int c = 0;
    int t = 1;

    // k = 1 pairs an independent sparse side with a KbarFree(l+1) dense side;
    // k = 2 uses a bipartite sparse side.
    static ClassSpec from_kl(int k, int l) {
        if ((k != 1 && k != 2) || l < 0)
            throw std::invalid_argument("class pair must be \"1,L\" or \"2,L\" with L >= 0");
        ClassSpec spec;
        spec.t = l + 1;
        spec.sparse = (k == 1) ? ClassId::edgeless() : ClassId::bipartite();
        spec.dense = ClassId::kbar_free(spec.t);
        spec.c = (k == 1) ? spec.t - 1 : 2 * (spec.t - 1);
        return spec;
    }

    static ClassSpec parse(std::string_view text) {
        std::size_t comma = text.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("class pair must look like \"1,2\"");
        auto to_int = [&](std::string_view part) {
            if (part.empty()) throw std::invalid_argument("class pair must look like \"1,2\"");
            int value = 0;
            for (char ch : part) {
                if (ch < '0' || ch > '9')
                    throw std::invalid_argument("class pair must look like \"1,2\"");
                value = value * 10 + (ch - '0');
                if (value > 1000) throw std::invalid_argument("class pair value too large");
            }
            return value;
        };
        return from_kl(to_int(text.substr(0, comma)), to_int(text.substr(comma + 1)));
    }

    std::string to_string() const {
        const int k = sparse.kind == GraphClass::edgeless ? 1 : 2;
        return std::to_string(k) + "," + std::to_string(t - 1);
    }

    bool operator==(const ClassSpec&) const = default;
};

enum class Side : std::uint8_t { left, right };

// Proper two-coloring; every edge joins left to right.
struct TwoColoring {
    std::vector<Side> side;
};

struct BipartiteResult {
    std::optional<TwoColoring> coloring;
    std::vector<int> odd_cycle;  // closed odd walk witness, nonempty iff not bipartite

    explicit operator bool() const { return coloring.has_value(); }
};

inline bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

// BFS layering per component, roots (smallest unvisited id) colored left.
// On failure the witness is an odd cycle as a vertex sequence whose
// consecutive entries, and last-to-first entries, are adjacent.
inline BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    auto odd_cycle_through = [&](int u, int w) {
        std::vector<int> from_u{u}, from_w{w};
        int a = u, b = w;
        while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            from_u.push_back(a);
        }
        while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            from_w.push_back(b);
        }
        while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            from_u.push_back(a);
            from_w.push_back(b);
        }
        // from_u ends at the common ancestor; append w's path back down.
        std::vector<int> cycle = from_u;
        for (std::size_t i = from_w.size() - 1; i-- > 0;) cycle.push_back(from_w[i]);
        return cycle;
    };

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return {std::nullopt, odd_cycle_through(u, w)};
                }
            }
        }
    }

    TwoColoring coloring;
    coloring.side.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        coloring.side.push_back(color[static_cast<std::size_t>(v)] == 0 ? Side::left
                                                                        : Side::right);
    return {std::move(coloring), {}};
}

// First independent subset of `within` with exactly `size` members, in
// canonical order, or nullopt. size 0 always yields the empty set.
inline std::optional<VertexSet> find_independent_subset(const Graph& g, const VertexSet& within,
                                                        int size) {
    detail::check_set(g, within);
    if (size < 0) throw std::invalid_argument("subset size must be nonnegative");
    std::optional<VertexSet> found;
    VertexSet current(g.order());
    auto rec = [&](auto&& self, const VertexSet& candidates, int needed) -> bool {
        if (needed == 0) {
            found = current;
            return true;
        }
        if (candidates.size() < needed) return false;
        for (int v : candidates) {
            current.insert(v);
            VertexSet rest = candidates - g.neighbors(v);
            rest.erase_below(v + 1);
            if (self(self, rest, needed - 1)) return true;
            current.erase(v);
        }
        return false;
    };
    rec(rec, within, size);
    return found;
}

struct KbarFreeResult {
    bool free;
    std::optional<VertexSet> witness;  // an independent set of exactly t vertices when !free

    explicit operator bool() const { return free; }
};

// Membership in KbarFree(t): no independent set of exactly t vertices,
// checked by subset enumeration with adjacency pruning.
inline KbarFreeResult is_kbar_free(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("independence bound t must be at least 1");
    auto witness = find_independent_subset(g, g.vertices(), t);
    return {!witness.has_value(), std::move(witness)};
}

// Whole-graph membership test for a class.
inline bool class_member(const ClassId& cls, const Graph& g) {
    switch (cls.kind) {
        case GraphClass::edgeless: return is_edgeless(g);
        case GraphClass::bipartite: return static_cast<bool>(is_bipartite(g));
        case GraphClass::kbar_free: return is_kbar_free(g, cls.t).free;
    }
    return false;
}

// Decides whether member + {new_vertex} still belongs to the class, assuming
// the induced subgraph on `member` already does. Hereditary classes make this
// the only check a growing enumeration needs:
//   edgeless:   new_vertex may touch nothing in member;
//   kbar_free:  no independent (t-1)-subset of member avoids new_vertex's
//               neighborhood (such a subset plus new_vertex would reach t);
//   bipartite:  recolor the grown induced subgraph from scratch.
inline bool incremental_member(const ClassId& cls, const Graph& g, const VertexSet& member,
                               int new_vertex) {
    detail::check_set(g, member);
    if (new_vertex < 0 || new_vertex >= g.order())
        throw std::out_of_range("vertex " + std::to_string(new_vertex) +
                                " outside graph of order " + std::to_string(g.order()));
    switch (cls.kind) {
        case GraphClass::edgeless:
            return !g.neighbors(new_vertex).intersects(member);
        case GraphClass::kbar_free: {
            VertexSet avoiding = member - g.neighbors(new_vertex);
            avoiding.erase(new_vertex);
            return !find_independent_subset(g, avoiding, cls.t - 1).has_value();
        }
        case GraphClass::bipartite: {
            VertexSet grown = member;
            grown.insert(new_vertex);
            return static_cast<bool>(is_bipartite(induced_subgraph(g, grown).graph));
        }
    }
    return false;
}

}  // namespace sdg

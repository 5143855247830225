#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdg {

// Set of vertex ids drawn from a fixed universe 0..n-1, packed into 64-bit
// blocks. Members enumerate in ascending order; that ascending sequence is
// the canonical serialization used for ordering and deduplication.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), bits_(block_count(universe), 0) {
        if (universe < 0) throw std::invalid_argument("universe must be nonnegative");
    }

    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check_range(v);
        return (bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        check_range(v);
        bits_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        check_range(v);
        bits_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

    // Removes every member smaller than v.
    void erase_below(int v) {
        if (v <= 0) return;
        if (v >= universe_) {
            clear();
            return;
        }
        const std::size_t block = static_cast<std::size_t>(v) >> 6;
        for (std::size_t i = 0; i < block; ++i) bits_[i] = 0;
        bits_[block] &= ~((std::uint64_t{1} << (v & 63)) - 1);
    }

    int size() const {
        int total = 0;
        for (std::uint64_t b : bits_) total += std::popcount(b);
        return total;
    }

    bool empty() const {
        for (std::uint64_t b : bits_) if (b) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        int v = next_member(0);
        return v == universe_ ? -1 : v;
    }

    bool any_member_above(int v) const {
        return next_member(v + 1) != universe_;
    }

    bool intersects(const VertexSet& other) const {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & other.bits_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // Members flipped within the universe.
    VertexSet complement() const {
        VertexSet out(universe_);
        for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = ~bits_[i];
        out.trim();
        return out;
    }

    bool operator==(const VertexSet& other) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        bool sep = false;
        for (int v : *this) {
            if (sep) os << ", ";
            os << v;
            sep = true;
        }
        os << '}';
        return os.str();
    }

    // Lexicographic order on the ascending member sequences. Walks to the
    // smallest element of the symmetric difference; all smaller elements are
    // shared, so the order is decided by who owns it and whether the other
    // set still has members beyond it.
    static bool canonical_less(const VertexSet& a, const VertexSet& b) {
        a.check_universe(b);
        for (std::size_t i = 0; i < a.bits_.size(); ++i) {
            std::uint64_t diff = a.bits_[i] ^ b.bits_[i];
            if (!diff) continue;
            int v = static_cast<int>(i * 64) + std::countr_zero(diff);
            if (a.contains(v)) return b.any_member_above(v);
            return !a.any_member_above(v);
        }
        return false;
    }

    class const_iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        int operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next_member(pos_ + 1);
            return *this;
        }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }
        bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

    private:
        friend class VertexSet;
        const_iterator(const VertexSet* s, int pos) : set_(s), pos_(pos) {}
        const VertexSet* set_;
        int pos_;
    };

    const_iterator begin() const { return {this, next_member(0)}; }
    const_iterator end() const { return {this, universe_}; }

    // Smallest member >= from, or universe() when none remains.
    int next_member(int from) const {
        if (from < 0) from = 0;
        if (from >= universe_) return universe_;
        std::size_t block = static_cast<std::size_t>(from) >> 6;
        std::uint64_t word = bits_[block] >> (from & 63);
        if (word) return from + std::countr_zero(word);
        for (++block; block < bits_.size(); ++block)
            if (bits_[block]) return static_cast<int>(block * 64) + std::countr_zero(bits_[block]);
        return universe_;
    }

private:
    static std::size_t block_count(int universe) {
        return static_cast<std::size_t>(universe + 63) / 64;
    }

    void check_range(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe_));
    }

    void check_universe(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw std::invalid_argument("vertex sets over different universes");
    }

    // Clears the unused bits of the last block.
    void trim() {
        int tail = universe_ & 63;
        if (tail && !bits_.empty()) bits_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
// No self-loops; adjacency is kept symmetric. Treated as immutable once
// built, so values can be shared freely between threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    // Duplicate insertions are no-ops; self-loops are rejected.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
        ++m_;
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexSet vertices() const {
        VertexSet all(n_);
        return all.complement();
    }

    // Edges as ascending (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].next_member(u + 1); v < n_;
                 v = adj_[static_cast<std::size_t>(u)].next_member(v + 1))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                                    std::to_string(n_));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

namespace detail {

inline void check_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
}

}  // namespace detail

// Edge uv present in the output iff absent in the input (u != v).
inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> id_map;  // id_map[new vertex] = vertex in the host graph
};

// Subgraph induced by s; vertices relabeled by the ascending enumeration of s.
inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    InducedSubgraph out;
    out.id_map = s.to_vector();
    out.graph = Graph(static_cast<int>(out.id_map.size()));
    for (std::size_t i = 0; i < out.id_map.size(); ++i)
        for (std::size_t j = i + 1; j < out.id_map.size(); ++j)
            if (g.has_edge(out.id_map[i], out.id_map[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

// True iff no edge of g has both endpoints in s. The empty set qualifies.
inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

// True iff all pairs in s are adjacent. Sets of size <= 1 qualify.
inline bool is_clique(const Graph& g, const VertexSet& s) {
    detail::check_set(g, s);
    for (int v : s) {
        VertexSet rest = s;
        rest.erase(v);
        if (!(rest - g.neighbors(v)).empty()) return false;
    }
    return true;
}

// Replaces each edge uv with a path u-x-y-v through two fresh vertices.
// The j-th edge in ascending (u, v) order gets x = n+2j and y = n+2j+1,
// so outputs are reproducible bit for bit. The result has n+2m vertices
// and 3m edges, and its maximum independent sets grow by exactly m.
inline Graph subdivide_edges(const Graph& g) {
    const auto edge_list = g.edges();
    const int n = g.order();
    Graph out(n + 2 * static_cast<int>(edge_list.size()));
    for (std::size_t j = 0; j < edge_list.size(); ++j) {
        const auto [u, v] = edge_list[j];
        const int x = n + 2 * static_cast<int>(j);
        const int y = x + 1;
        out.add_edge(u, x);
        out.add_edge(x, y);
        out.add_edge(y, v);
    }
    return out;
}

struct GeneratedGraph {
    Graph graph;
    std::vector<VertexSet> parts;  // first k parts edgeless, last l parts cliques
    int independent_parts = 0;
    int clique_parts = 0;

    // Union of the k independent parts.
    VertexSet sparse_union() const {
        VertexSet s(graph.order());
        for (int i = 0; i < independent_parts; ++i) s |= parts[static_cast<std::size_t>(i)];
        return s;
    }

    // Union of the l clique parts.
    VertexSet dense_union() const {
        VertexSet d(graph.order());
        for (int i = independent_parts; i < independent_parts + clique_parts; ++i)
            d |= parts[static_cast<std::size_t>(i)];
        return d;
    }
};

// Plants a partition into k edgeless parts and l complete parts, then draws
// each cross-part pair independently with probability cross_edge_prob.
// Identical seeds reproduce identical graphs; the planted parts are returned
// so callers can tell "a partition exists" from "the solver found one".
inline GeneratedGraph generate_kl_graph(int k, int l, const std::vector<int>& part_sizes,
                                        double cross_edge_prob, std::uint64_t seed) {
    if (k < 0 || l < 0) throw std::invalid_argument("part counts must be nonnegative");
    if (part_sizes.size() != static_cast<std::size_t>(k + l))
        throw std::invalid_argument("expected " + std::to_string(k + l) + " part sizes, got " +
                                    std::to_string(part_sizes.size()));
    for (int s : part_sizes)
        if (s < 0) throw std::invalid_argument("part sizes must be nonnegative");
    if (cross_edge_prob < 0.0 || cross_edge_prob > 1.0)
        throw std::invalid_argument("cross edge probability must lie in [0, 1]");

    int n = 0;
    for (int s : part_sizes) n += s;

    GeneratedGraph out;
    out.graph = Graph(n);
    out.independent_parts = k;
    out.clique_parts = l;

    std::vector<int> part_of(static_cast<std::size_t>(n), 0);
    int next = 0;
    for (int p = 0; p < k + l; ++p) {
        VertexSet part(n);
        for (int i = 0; i < part_sizes[static_cast<std::size_t>(p)]; ++i) {
            part.insert(next);
            part_of[static_cast<std::size_t>(next)] = p;
            ++next;
        }
        out.parts.push_back(std::move(part));
    }

    // Clique parts are complete internally; the first k parts stay edgeless.
    for (int p = k; p < k + l; ++p) {
        const auto members = out.parts[static_cast<std::size_t>(p)].to_vector();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                out.graph.add_edge(members[i], members[j]);
    }

    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)] &&
                draw() < cross_edge_prob)
                out.graph.add_edge(u, v);
    return out;
}

}  // namespace sdg

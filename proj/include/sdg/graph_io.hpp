#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdg/graph.hpp"

namespace sdg {

struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

namespace detail {

struct Line {
    int number;
    std::string text;
};

// Nonblank lines with their 1-based numbers.
inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        bool blank = true;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back({number, std::string(raw)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

// Extracts exactly `count` ints from the line body; rejects trailing junk.
inline std::vector<long long> parse_ints(const Line& line, std::size_t count,
                                         std::string_view expected) {
    std::istringstream iss(line.text);
    std::vector<long long> out(count);
    for (auto& v : out)
        if (!(iss >> v))
            throw parse_error(line.number, "expected \"" + std::string(expected) + "\"");
    std::string tail;
    if (iss >> tail)
        throw parse_error(line.number, "trailing content \"" + tail + "\"");
    return out;
}

inline void check_vertex_token(const Line& line, long long v, long long lo, long long hi) {
    if (v < lo || v > hi)
        throw parse_error(line.number, "vertex id " + std::to_string(v) + " out of range [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace detail

// Edge-list format: a header "n m" followed by m lines "u v" with 0-based
// endpoints. Duplicate edge lines collapse; self-loops are rejected.
inline Graph parse_edge_list(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw parse_error(1, "missing \"n m\" header");
    const auto header = detail::parse_ints(lines[0], 2, "n m");
    const long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw parse_error(lines[0].number, "negative count in header");

    Graph g(static_cast<int>(n));
    if (lines.size() - 1 != static_cast<std::size_t>(m))
        throw parse_error(lines.back().number,
                          "expected " + std::to_string(m) + " edge lines, found " +
                              std::to_string(lines.size() - 1));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto uv = detail::parse_ints(lines[i], 2, "u v");
        detail::check_vertex_token(lines[i], uv[0], 0, n - 1);
        detail::check_vertex_token(lines[i], uv[1], 0, n - 1);
        if (uv[0] == uv[1])
            throw parse_error(lines[i].number, "self-loop at vertex " + std::to_string(uv[0]));
        g.add_edge(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    return g;
}

// DIMACS format: optional "c" comment lines, one "p edge n m" problem line,
// then m lines "e u v" with 1-based endpoints (stored 0-based).
inline Graph parse_dimacs(std::string_view text) {
    const auto lines = detail::split_lines(text);
    bool have_problem = false;
    long long n = 0, m = 0;
    long long edges_seen = 0;
    Graph g;
    for (const auto& line : lines) {
        std::istringstream iss(line.text);
        std::string kind;
        iss >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (have_problem) throw parse_error(line.number, "duplicate problem line");
            std::string format;
            if (!(iss >> format >> n >> m) || format != "edge")
                throw parse_error(line.number, "expected \"p edge n m\"");
            if (n < 0 || m < 0) throw parse_error(line.number, "negative count in problem line");
            g = Graph(static_cast<int>(n));
            have_problem = true;
            continue;
        }
        if (kind == "e") {
            if (!have_problem)
                throw parse_error(line.number, "edge before \"p edge n m\" problem line");
            long long u, v;
            if (!(iss >> u >> v)) throw parse_error(line.number, "expected \"e u v\"");
            detail::check_vertex_token(line, u, 1, n);
            detail::check_vertex_token(line, v, 1, n);
            if (u == v)
                throw parse_error(line.number, "self-loop at vertex " + std::to_string(u));
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            ++edges_seen;
            continue;
        }
        throw parse_error(line.number, "unknown line type \"" + kind + "\"");
    }
    if (!have_problem) throw parse_error(lines.empty() ? 1 : lines.back().number,
                                         "missing \"p edge n m\" problem line");
    if (edges_seen != m)
        throw parse_error(lines.back().number, "expected " + std::to_string(m) +
                                                   " edge lines, found " +
                                                   std::to_string(edges_seen));
    return g;
}

// Serialization emits edges in ascending (u, v) order for both formats.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

inline std::string to_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

}  // namespace sdg

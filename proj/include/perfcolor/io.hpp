#pragma once

// Graph file formats.
//
// DIMACS .col subset:  `c ...` comments, one `p edge N M` header, then
// `e u v` lines with 1-based endpoints. The header's vertex count is
// authoritative; its edge count is advisory (real .col files disagree
// with themselves often enough that the edge lines have to win).
//
// Edge list: optional first line `n <N>`, then `u v` lines with 0-based
// endpoints. Blank lines and `#` comments are ignored. Without the `n`
// header the vertex count is 1 + the largest endpoint.

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "perfcolor/graph.hpp"

namespace perfcolor {

class parse_error : public graph_error {
public:
    parse_error(const std::string& what, int line)
        : graph_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class graph_format { dimacs, edgelist };

/// Parse result: the graph, the vertex labels as they appeared in the
/// source file (1-based for DIMACS, 0-based for edge lists), and any
/// non-fatal diagnostics.
struct parsed_graph {
    graph g;
    std::vector<std::int64_t> labels;  // labels[v] = label used in the input
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::optional<std::int64_t> to_int(std::string_view tok) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

template <class Fn>
inline void for_each_line(std::string_view text, Fn&& fn) {
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos)
                                                               : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++lineno;
        fn(line, lineno);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace detail

inline parsed_graph parse_dimacs(std::string_view text) {
    using detail::split_ws;
    using detail::to_int;
    int n = -1;
    std::int64_t declared_m = -1;
    std::vector<edge> edges;
    detail::for_each_line(text, [&](std::string_view line, int lineno) {
        auto toks = split_ws(line);
        if (toks.empty()) return;
        if (toks[0] == "c") return;
        if (toks[0] == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            if (toks.size() != 4 || toks[1] != "edge")
                throw parse_error("expected 'p edge N M'", lineno);
            auto pn = to_int(toks[2]);
            auto pm = to_int(toks[3]);
            if (!pn || !pm || *pn < 0 || *pm < 0)
                throw parse_error("bad counts in problem line", lineno);
            n = static_cast<int>(*pn);
            declared_m = *pm;
            return;
        }
        if (toks[0] == "e") {
            if (n < 0) throw parse_error("edge before problem line", lineno);
            if (toks.size() != 3) throw parse_error("expected 'e u v'", lineno);
            auto u = to_int(toks[1]);
            auto v = to_int(toks[2]);
            if (!u || !v) throw parse_error("bad endpoint", lineno);
            if (*u < 1 || *u > n || *v < 1 || *v > n)
                throw parse_error("endpoint out of range 1.." + std::to_string(n), lineno);
            if (*u == *v) throw parse_error("self-loop rejected", lineno);
            edges.emplace_back(static_cast<int>(*u) - 1, static_cast<int>(*v) - 1);
            return;
        }
        throw parse_error("unrecognized line", lineno);
    });
    if (n < 0) throw parse_error("missing 'p edge N M' line", 1);

    parsed_graph out;
    out.g = build_graph(n, edges);
    if (declared_m != static_cast<std::int64_t>(edges.size()) && declared_m != out.g.m) {
        out.warnings.push_back("header declares " + std::to_string(declared_m) +
                               " edges but the file contains " + std::to_string(edges.size()) +
                               " edge lines (" + std::to_string(out.g.m) +
                               " distinct); using the edge lines");
    }
    out.labels.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.labels[v] = v + 1;
    return out;
}

inline parsed_graph parse_edgelist(std::string_view text) {
    using detail::split_ws;
    using detail::to_int;
    std::optional<int> declared_n;
    bool saw_data = false;
    std::vector<edge> edges;
    std::int64_t max_vertex = -1;
    detail::for_each_line(text, [&](std::string_view line, int lineno) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') return;
        if (toks[0] == "n") {
            if (saw_data || declared_n)
                throw parse_error("'n <N>' must be the first data line", lineno);
            if (toks.size() != 2) throw parse_error("expected 'n <N>'", lineno);
            auto v = to_int(toks[1]);
            if (!v || *v < 0) throw parse_error("bad vertex count", lineno);
            declared_n = static_cast<int>(*v);
            saw_data = true;
            return;
        }
        saw_data = true;
        if (toks.size() != 2) throw parse_error("expected 'u v'", lineno);
        auto u = to_int(toks[0]);
        auto v = to_int(toks[1]);
        if (!u || !v || *u < 0 || *v < 0) throw parse_error("bad endpoint", lineno);
        if (declared_n && (*u >= *declared_n || *v >= *declared_n))
            throw parse_error("endpoint out of range 0.." + std::to_string(*declared_n - 1),
                              lineno);
        if (*u == *v) throw parse_error("self-loop rejected", lineno);
        max_vertex = std::max({max_vertex, *u, *v});
        edges.emplace_back(static_cast<int>(*u), static_cast<int>(*v));
    });
    int n = declared_n ? *declared_n : static_cast<int>(max_vertex + 1);
    parsed_graph out;
    out.g = build_graph(n, edges);
    out.labels.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.labels[v] = v;
    return out;
}

inline parsed_graph parse_graph(std::string_view text, graph_format fmt) {
    return fmt == graph_format::dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

inline std::string write_edgelist(const graph& g) {
    std::ostringstream os;
    os << "n " << g.n << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj(u))
            if (u < v) os << u << " " << v << "\n";
    return os.str();
}

inline std::string write_dimacs(const graph& g) {
    std::ostringstream os;
    os << "p edge " << g.n << " " << g.m << "\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj(u))
            if (u < v) os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

/// Guess the format from the file name (.col/.dimacs) or, failing that,
/// from the first data line ('c'/'p' markers mean DIMACS).
inline graph_format sniff_format(std::string_view text, std::string_view filename = {}) {
    if (filename.ends_with(".col") || filename.ends_with(".dimacs")) return graph_format::dimacs;
    graph_format result = graph_format::edgelist;
    bool decided = false;
    detail::for_each_line(text, [&](std::string_view line, int) {
        if (decided) return;
        auto toks = detail::split_ws(line);
        if (toks.empty()) return;
        decided = true;
        if (toks[0] == "c" || toks[0] == "p" || toks[0] == "e") result = graph_format::dimacs;
    });
    return result;
}

}  // namespace perfcolor

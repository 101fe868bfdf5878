#pragma once

// Constructs a perfect coloring for a recognized-positive graph: a proper
// coloring in which every connected induced subgraph uses exactly as many
// colors as its clique number. Per component that is a minimum proper
// coloring (2 colors for a bipartite component with an edge, k for a
// complete k-partite one), and colors are reused across components, so
// the global palette size equals the graph's clique number.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "perfcolor/graph.hpp"
#include "perfcolor/recognition.hpp"

namespace perfcolor {

struct coloring {
    std::vector<int> color;  // one entry per vertex
    int palette_size = 0;    // 1 + max color; 0 for the empty graph
};

struct properness {
    bool proper = true;
    int u = -1, v = -1;  // first violating edge when not proper
};

/// True iff no edge joins two equal colors; on failure reports the first
/// violating edge in (u ascending, v ascending) order. O(n + m).
inline properness verify_proper(const graph& g, const coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n)
        throw std::invalid_argument("coloring size does not match vertex count");
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj(u))
            if (u < v && c.color[u] == c.color[v]) return {false, u, v};
    return {};
}

/// Colors a graph the recognizer accepted: bipartite components get
/// colors {0,1} (side_a -> 0), complete multipartite components get one
/// color per part in canonical part order, singletons get 0. O(n + m).
inline coloring perfect_coloring(const graph& g, const recognition_report& report) {
    if (static_cast<int>(report.labeling.component_id.size()) != g.n)
        throw std::invalid_argument("report does not match graph: vertex counts differ");
    if (static_cast<int>(report.classes.size()) != report.labeling.component_count)
        throw std::invalid_argument("report is incomplete: class per component expected");
    coloring out;
    out.color.assign(static_cast<std::size_t>(g.n), 0);
    for (const auto& cls : report.classes) {
        if (const auto* bip = std::get_if<bipartite_class>(&cls)) {
            for (int v : bip->side_a) out.color[v] = 0;
            for (int v : bip->side_b) out.color[v] = 1;
            out.palette_size = std::max(out.palette_size, bip->side_b.empty() ? 1 : 2);
        } else if (const auto* cm = std::get_if<multipartite_class>(&cls)) {
            for (std::size_t i = 0; i < cm->parts.size(); ++i)
                for (int v : cm->parts[i]) out.color[v] = static_cast<int>(i);
            out.palette_size = std::max(out.palette_size, static_cast<int>(cm->parts.size()));
        } else {
            throw std::invalid_argument(
                "graph is not perfectly colorable: report contains a rejected component");
        }
    }
    return out;
}

/// Distinct colors used inside each component, indexed by component id.
inline std::vector<int> component_color_counts(const graph& g,
                                               const recognition_report& report,
                                               const coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n)
        throw std::invalid_argument("coloring size does not match vertex count");
    std::vector<std::vector<int>> seen(
        static_cast<std::size_t>(report.labeling.component_count));
    for (int v = 0; v < g.n; ++v) seen[report.labeling.component_id[v]].push_back(c.color[v]);
    std::vector<int> counts(seen.size());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        auto& cols = seen[i];
        std::sort(cols.begin(), cols.end());
        counts[i] =
            static_cast<int>(std::unique(cols.begin(), cols.end()) - cols.begin());
    }
    return counts;
}

// Coloring text format: one `<vertex> <color>` line per vertex, 0-based,
// sorted by vertex. `#` comments and blank lines are ignored on input.

inline std::string write_coloring(const coloring& c) {
    std::ostringstream os;
    for (std::size_t v = 0; v < c.color.size(); ++v) os << v << " " << c.color[v] << "\n";
    return os.str();
}

inline coloring parse_coloring(std::string_view text, int n) {
    coloring out;
    out.color.assign(static_cast<std::size_t>(n), -1);
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos)
                                                               : text.substr(pos, nl - pos);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (!line.empty() && line.front() != '#') {
            std::istringstream is{std::string(line)};
            long long v = -1, col = -1;
            std::string extra;
            if (!(is >> v >> col) || (is >> extra) || v < 0 || v >= n || col < 0)
                throw graph_error("coloring line " + std::to_string(lineno) +
                                  ": expected '<vertex> <color>' with vertex < " +
                                  std::to_string(n));
            if (out.color[static_cast<std::size_t>(v)] != -1)
                throw graph_error("coloring line " + std::to_string(lineno) +
                                  ": duplicate vertex " + std::to_string(v));
            out.color[static_cast<std::size_t>(v)] = static_cast<int>(col);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    for (int v = 0; v < n; ++v)
        if (out.color[v] == -1)
            throw graph_error("coloring is missing vertex " + std::to_string(v));
    for (int v = 0; v < n; ++v) out.palette_size = std::max(out.palette_size, out.color[v] + 1);
    return out;
}

}  // namespace perfcolor

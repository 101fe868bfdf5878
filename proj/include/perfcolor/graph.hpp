#pragma once

// Immutable simple undirected graphs in compressed adjacency (CSR) form,
// plus the traversal primitives shared by the recognition and coloring
// algorithms: connected components and induced subgraphs.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace perfcolor {

class graph_error : public std::runtime_error {
public:
    explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// Sorted, duplicate-free list of vertex indices.
using vertex_set = std::vector<int>;

using edge = std::pair<int, int>;

/// Simple undirected graph. Vertices are dense 0-based integers.
/// Neighbor lists are strictly increasing, adjacency is symmetric and
/// loop-free, and the flat neighbor array has length 2*m.
struct graph {
    int n = 0;
    std::vector<int> offsets;    // size n+1
    std::vector<int> neighbors;  // size 2*m, per-vertex slices sorted
    std::int64_t m = 0;          // undirected edges, counted once

    std::span<const int> adj(int v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }

    int degree(int v) const { return offsets[v + 1] - offsets[v]; }

    bool has_edge(int u, int v) const {
        auto a = adj(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Edges as (u, v) with u < v, in lexicographic order.
    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(static_cast<std::size_t>(m));
        for (int u = 0; u < n; ++u)
            for (int v : adj(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const graph&) const = default;
};

inline bool is_valid_vertex_set(const vertex_set& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n) return false;
        if (i > 0 && s[i - 1] >= s[i]) return false;
    }
    return true;
}

/// Builds a graph from an unordered edge list. Duplicate edges collapse
/// to one; the result is independent of input edge order. Endpoints out
/// of range and self-loops are rejected.
inline graph build_graph(int n, const std::vector<edge>& edges) {
    if (n < 0) throw graph_error("vertex count must be non-negative");
    std::vector<edge> dir;
    dir.reserve(edges.size() * 2);
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw graph_error("edge endpoint out of range: (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") with n = " + std::to_string(n));
        if (a == b)
            throw graph_error("self-loop rejected at vertex " + std::to_string(a));
        dir.emplace_back(a, b);
        dir.emplace_back(b, a);
    }
    std::sort(dir.begin(), dir.end());
    dir.erase(std::unique(dir.begin(), dir.end()), dir.end());

    graph g;
    g.n = n;
    g.m = static_cast<std::int64_t>(dir.size()) / 2;
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    g.neighbors.resize(dir.size());
    for (const auto& [u, v] : dir) g.offsets[static_cast<std::size_t>(u) + 1]++;
    for (int v = 0; v < n; ++v) g.offsets[static_cast<std::size_t>(v) + 1] += g.offsets[v];
    // dir is sorted by (u, v), so each slice comes out strictly increasing
    std::size_t i = 0;
    for (const auto& [u, v] : dir) g.neighbors[i++] = v;
    (void)i;
    return g;
}

struct component_labeling {
    std::vector<int> component_id;  // ids contiguous 0..count-1
    int component_count = 0;
};

/// BFS labeling; component ids are assigned in increasing order of the
/// smallest vertex each component contains. O(n + m).
inline component_labeling connected_components(const graph& g) {
    component_labeling out;
    out.component_id.assign(static_cast<std::size_t>(g.n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(g.n));
    for (int s = 0; s < g.n; ++s) {
        if (out.component_id[s] != -1) continue;
        int id = out.component_count++;
        out.component_id[s] = id;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.adj(u)) {
                if (out.component_id[v] == -1) {
                    out.component_id[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    return out;
}

/// Vertex list of every component, indexed by component id. Lists come
/// out sorted because vertices are scanned in increasing order.
inline std::vector<vertex_set> component_vertex_sets(const graph& g,
                                                     const component_labeling& labeling) {
    std::vector<vertex_set> comps(static_cast<std::size_t>(labeling.component_count));
    for (int v = 0; v < g.n; ++v) comps[labeling.component_id[v]].push_back(v);
    return comps;
}

struct induced_subgraph_result {
    graph g;
    vertex_set vertices;  // vertices[new_id] = old id; rank herein is the old->new map

    int to_new(int old_vertex) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), old_vertex);
        if (it == vertices.end() || *it != old_vertex) return -1;
        return static_cast<int>(it - vertices.begin());
    }
};

/// Subgraph on vertex set s with exactly the edges of g inside s. New
/// ids follow the sorted order of s.
inline induced_subgraph_result induced_subgraph(const graph& g, const vertex_set& s) {
    if (!is_valid_vertex_set(s, g.n))
        throw graph_error("induced_subgraph: vertex set not sorted/unique/in range");
    induced_subgraph_result out;
    out.vertices = s;
    std::vector<edge> edges;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (int w : g.adj(s[i])) {
            if (w <= s[i]) continue;
            int j = out.to_new(w);
            if (j >= 0) edges.emplace_back(static_cast<int>(i), j);
        }
    }
    out.g = build_graph(static_cast<int>(s.size()), edges);
    return out;
}

}  // namespace perfcolor

#pragma once

// Per-component classification: every component of a graph that admits a
// perfect coloring is bipartite or complete multipartite, so recognition
// is a bipartiteness check followed by a neighborhood-partition check,
// both linear time. Components that fail both get a small obstruction
// certificate: an induced paw (triangle plus a pendant vertex) or a
// chordless odd cycle of length >= 5.

#include <array>
#include <climits>
#include <cstdint>
#include <unordered_map>
#include <variant>
#include <vector>

#include "perfcolor/graph.hpp"

namespace perfcolor {

struct bipartite_class {
    vertex_set side_a;  // holds the component's smallest vertex
    vertex_set side_b;
};

struct multipartite_class {
    // Independent parts covering the component, every cross-part pair an
    // edge. Ordered by (size descending, smallest vertex ascending).
    std::vector<vertex_set> parts;
};

/// Four vertices inducing exactly a triangle plus one pendant edge.
struct induced_paw {
    std::array<int, 3> triangle;  // ascending
    int attach;                   // the triangle vertex the pendant touches
    int pendant;
};

/// Chordless odd cycle, length >= 5, in cyclic vertex order.
struct odd_hole {
    std::vector<int> cycle;
};

using certificate = std::variant<induced_paw, odd_hole>;

struct neither_class {
    certificate cert;
};

using component_class = std::variant<bipartite_class, multipartite_class, neither_class>;

struct recognition_report {
    component_labeling labeling;
    std::vector<component_class> classes;  // indexed by component id
    bool perfectly_colorable = false;      // true iff no component is neither
};

struct bipartite_check {
    bool is_bipartite = false;
    vertex_set side_a, side_b;   // valid on success
    std::vector<int> odd_cycle;  // valid on failure; simple cycle from the BFS tree
};

struct multipartite_check {
    bool is_multipartite = false;
    std::vector<vertex_set> parts;         // valid on success
    std::array<int, 3> witness{-1, -1, -1};  // (u,v,w): uv an edge, w adjacent to neither
};

inline bool validate_certificate(const graph& g, const certificate& cert);

namespace detail {

// Reusable per-vertex arrays so that recognizing a graph with many
// components stays O(n + m) overall. Entries keyed by vertex are written
// at most once per vertex across a whole recognition pass; `mark` users
// restore what they set; the odd-cycle search stamps `dist` by epoch.
struct scratch {
    std::vector<int> side;
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<int> queue;
    std::vector<char> mark;
    std::vector<int> dist;
    std::vector<int> stamp;
    int epoch = 0;

    explicit scratch(int n)
        : side(static_cast<std::size_t>(n), -1),
          parent(static_cast<std::size_t>(n), -1),
          depth(static_cast<std::size_t>(n), 0),
          mark(static_cast<std::size_t>(n), 0),
          dist(static_cast<std::size_t>(n), 0),
          stamp(static_cast<std::size_t>(n), 0) {
        queue.reserve(static_cast<std::size_t>(n));
    }
};

inline void validate_component(const graph& g, const vertex_set& comp) {
    if (comp.empty()) throw std::invalid_argument("component must be nonempty");
    if (!is_valid_vertex_set(comp, g.n))
        throw std::invalid_argument("component vertex set not sorted/unique/in range");
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> queue{comp.front()};
    seen[comp.front()] = 1;
    std::size_t reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int v : g.adj(queue[head])) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    if (reached != comp.size())
        throw std::invalid_argument("vertex set is not one whole connected component");
    for (int v : comp)
        if (!seen[v])
            throw std::invalid_argument("vertex set is not one whole connected component");
}

inline bipartite_check check_bipartite_impl(const graph& g, const vertex_set& comp,
                                            scratch& s) {
    bipartite_check out;
    const int root = comp.front();
    s.side[root] = 0;
    s.depth[root] = 0;
    s.parent[root] = -1;
    s.queue.clear();
    s.queue.push_back(root);
    int cu = -1, cv = -1;
    for (std::size_t head = 0; head < s.queue.size() && cu < 0; ++head) {
        int u = s.queue[head];
        for (int v : g.adj(u)) {
            if (s.side[v] == -1) {
                s.side[v] = s.side[u] ^ 1;
                s.depth[v] = s.depth[u] + 1;
                s.parent[v] = u;
                s.queue.push_back(v);
            } else if (s.side[v] == s.side[u]) {
                cu = u;
                cv = v;
                break;
            }
        }
    }
    if (cu >= 0) {
        // conflicting edge joins two vertices of the same BFS layer; the
        // tree paths to their lowest common ancestor close an odd cycle
        std::vector<int> pu{cu}, pv{cv};
        int a = cu, b = cv;
        while (a != b) {
            a = s.parent[a];
            b = s.parent[b];
            pu.push_back(a);
            pv.push_back(b);
        }
        pv.pop_back();  // drop the shared ancestor from one side
        out.odd_cycle = std::move(pu);
        out.odd_cycle.insert(out.odd_cycle.end(), pv.rbegin(), pv.rend());
        return out;
    }
    out.is_bipartite = true;
    for (int v : comp) (s.side[v] == 0 ? out.side_a : out.side_b).push_back(v);
    return out;
}

inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t neighborhood_fingerprint(const graph& g, int v) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.degree(v));
    for (int w : g.adj(v)) h = mix64(h ^ (static_cast<std::uint64_t>(w) + 1));
    return h;
}

// Complete multipartite iff the "identical neighborhood" classes satisfy
// deg(v) = |comp| - |class(v)| for every vertex: classes are independent
// by construction (equal neighborhoods cannot be adjacent in a simple
// graph), and summing the degree condition forces every cross-class pair
// to be an edge. Fingerprints only bucket candidates; class membership is
// confirmed by comparing actual neighbor lists, so hash collisions cannot
// change the answer.
inline multipartite_check check_complete_multipartite_impl(const graph& g,
                                                           const vertex_set& comp,
                                                           scratch& s) {
    const int nc = static_cast<int>(comp.size());
    std::vector<std::vector<int>> classes;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(comp.size());
    std::vector<int> class_of(comp.size());
    auto class_index = [&](int v) -> int {
        auto& cand = buckets[neighborhood_fingerprint(g, v)];
        for (int ci : cand) {
            auto ra = g.adj(classes[ci].front());
            auto rb = g.adj(v);
            if (std::equal(ra.begin(), ra.end(), rb.begin(), rb.end())) return ci;
        }
        cand.push_back(static_cast<int>(classes.size()));
        classes.emplace_back();
        return cand.back();
    };
    for (std::size_t i = 0; i < comp.size(); ++i) {
        int ci = class_index(comp[i]);
        classes[ci].push_back(comp[i]);
        class_of[i] = ci;
    }

    int bad = -1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        if (g.degree(comp[i]) != nc - static_cast<int>(classes[class_of[i]].size())) {
            bad = static_cast<int>(i);
            break;
        }
    }

    multipartite_check out;
    if (bad < 0) {
        out.is_multipartite = true;
        std::vector<int> order(classes.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (classes[a].size() != classes[b].size())
                return classes[a].size() > classes[b].size();
            return classes[a].front() < classes[b].front();
        });
        out.parts.reserve(order.size());
        for (int ci : order) out.parts.push_back(std::move(classes[ci]));
        return out;
    }

    // Build the (edge, lonely vertex) witness: pick some vertex v missing
    // a neighbor w outside its class, then an endpoint seen by exactly
    // one of the two. The classes being exact makes both picks total.
    const int v = comp[bad];
    for (int x : g.adj(v)) s.mark[x] = 1;
    for (int x : classes[class_of[bad]]) s.mark[x] = 1;
    int w = -1;
    for (int x : comp) {
        if (!s.mark[x]) {
            w = x;
            break;
        }
    }
    for (int x : g.adj(v)) s.mark[x] = 0;
    for (int x : classes[class_of[bad]]) s.mark[x] = 0;

    for (int x : g.adj(w)) s.mark[x] = 1;
    int x_only_v = -1;
    for (int x : g.adj(v)) {
        if (!s.mark[x]) {
            x_only_v = x;
            break;
        }
    }
    for (int x : g.adj(w)) s.mark[x] = 0;
    if (x_only_v >= 0) {
        out.witness = {v, x_only_v, w};
        return out;
    }
    for (int x : g.adj(v)) s.mark[x] = 1;
    int x_only_w = -1;
    for (int x : g.adj(w)) {
        if (!s.mark[x]) {
            x_only_w = x;
            break;
        }
    }
    for (int x : g.adj(v)) s.mark[x] = 0;
    out.witness = {w, x_only_w, v};
    return out;
}

inline std::vector<int> canonical_cycle(std::vector<int> cycle) {
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

inline certificate extract_certificate_impl(const graph& g, const vertex_set& comp,
                                            scratch& s) {
    // Shortest odd cycle: BFS from every vertex; an edge inside one BFS
    // layer at depth d closes an odd walk of length 2d+1, and the best
    // such walk over all roots is a shortest odd cycle (simple after
    // cutting at the lowest common ancestor, and chordless by
    // minimality).
    int best = INT_MAX, best_src = -1, bu = -1, bv = -1;
    auto bfs = [&](int src) {
        ++s.epoch;
        s.dist[src] = 0;
        s.stamp[src] = s.epoch;
        s.parent[src] = -1;
        s.queue.clear();
        s.queue.push_back(src);
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            int u = s.queue[head];
            for (int v : g.adj(u)) {
                if (s.stamp[v] != s.epoch) {
                    s.stamp[v] = s.epoch;
                    s.dist[v] = s.dist[u] + 1;
                    s.parent[v] = u;
                    s.queue.push_back(v);
                }
            }
        }
    };
    for (int src : comp) {
        bfs(src);
        for (int u : comp) {
            for (int v : g.adj(u)) {
                if (u < v && s.dist[u] == s.dist[v] && 2 * s.dist[u] + 1 < best) {
                    best = 2 * s.dist[u] + 1;
                    best_src = src;
                    bu = u;
                    bv = v;
                }
            }
        }
        if (best == 3) break;
    }
    if (best == INT_MAX)
        throw std::invalid_argument("no obstruction: component is bipartite");

    if (best >= 5) {
        bfs(best_src);
        std::vector<int> pu{bu}, pv{bv};
        int a = bu, b = bv;
        while (a != b) {
            a = s.parent[a];
            b = s.parent[b];
            pu.push_back(a);
            pv.push_back(b);
        }
        pv.pop_back();
        pu.insert(pu.end(), pv.rbegin(), pv.rend());
        odd_hole hole{canonical_cycle(std::move(pu))};
        certificate cert{hole};
        if (!validate_certificate(g, cert))
            throw graph_error("internal error: odd-hole certificate failed validation");
        return cert;
    }

    // The component has a triangle and is not complete multipartite, so
    // some triangle has a vertex adjacent to exactly one of its corners.
    for (int u : comp) {
        for (int v : g.adj(u)) {
            if (v <= u) continue;
            auto au = g.adj(u);
            for (int w : g.adj(v)) {
                if (w <= v || !std::binary_search(au.begin(), au.end(), w)) continue;
                // triangle u < v < w; scan its neighborhood for a pendant
                for (int list : {u, v, w}) {
                    for (int x : g.adj(list)) {
                        if (x == u || x == v || x == w) continue;
                        int cnt = static_cast<int>(g.has_edge(x, u)) +
                                  static_cast<int>(g.has_edge(x, v)) +
                                  static_cast<int>(g.has_edge(x, w));
                        if (cnt != 1) continue;
                        int attach = g.has_edge(x, u) ? u : (g.has_edge(x, v) ? v : w);
                        induced_paw paw{{u, v, w}, attach, x};
                        certificate cert{paw};
                        if (!validate_certificate(g, cert))
                            throw graph_error(
                                "internal error: paw certificate failed validation");
                        return cert;
                    }
                }
            }
        }
    }
    throw std::invalid_argument("no obstruction: component is complete multipartite");
}

inline component_class classify_component_impl(const graph& g, const vertex_set& comp,
                                               scratch& s) {
    // A component can be both bipartite and complete multipartite
    // (complete bipartite graphs); bipartite wins for deterministic
    // output, and the colorer treats the two identically.
    auto b = check_bipartite_impl(g, comp, s);
    if (b.is_bipartite)
        return bipartite_class{std::move(b.side_a), std::move(b.side_b)};
    auto m = check_complete_multipartite_impl(g, comp, s);
    if (m.is_multipartite) return multipartite_class{std::move(m.parts)};
    return neither_class{extract_certificate_impl(g, comp, s)};
}

}  // namespace detail

/// 2-coloring attempt on one connected component. On failure the result
/// carries an odd cycle read off the BFS tree. side_a contains the
/// component's smallest vertex. O(n + m).
inline bipartite_check check_bipartite(const graph& g, const vertex_set& comp) {
    detail::validate_component(g, comp);
    detail::scratch s(g.n);
    return detail::check_bipartite_impl(g, comp, s);
}

/// Neighborhood-partition test for one connected component. On failure
/// the witness is a triple (u,v,w) with uv an edge and w adjacent to
/// neither endpoint. O(n + m) expected.
inline multipartite_check check_complete_multipartite(const graph& g, const vertex_set& comp) {
    detail::validate_component(g, comp);
    detail::scratch s(g.n);
    return detail::check_complete_multipartite_impl(g, comp, s);
}

/// Obstruction certificate for a component that is neither bipartite nor
/// complete multipartite. Allowed to exceed linear time (O(n*m)).
inline certificate extract_certificate(const graph& g, const vertex_set& comp) {
    detail::validate_component(g, comp);
    detail::scratch s(g.n);
    return detail::extract_certificate_impl(g, comp, s);
}

inline component_class classify_component(const graph& g, const vertex_set& comp) {
    detail::validate_component(g, comp);
    detail::scratch s(g.n);
    return detail::classify_component_impl(g, comp, s);
}

/// Classifies every component and decides perfect colorability. The
/// decision path runs in O(n + m); certificate extraction for rejected
/// components may cost more.
inline recognition_report recognize(const graph& g) {
    recognition_report rep;
    rep.labeling = connected_components(g);
    auto comps = component_vertex_sets(g, rep.labeling);
    detail::scratch s(g.n);
    rep.classes.reserve(comps.size());
    rep.perfectly_colorable = true;
    for (const auto& comp : comps) {
        rep.classes.push_back(detail::classify_component_impl(g, comp, s));
        if (std::holds_alternative<neither_class>(rep.classes.back()))
            rep.perfectly_colorable = false;
    }
    return rep;
}

/// Checks a certificate against the graph by induced-subgraph
/// inspection: a paw must induce exactly its four edges, an odd hole must
/// induce exactly the cycle (odd length >= 5, chordless).
inline bool validate_certificate(const graph& g, const certificate& cert) {
    if (const auto* paw = std::get_if<induced_paw>(&cert)) {
        vertex_set s{paw->triangle[0], paw->triangle[1], paw->triangle[2], paw->pendant};
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
        if (!is_valid_vertex_set(s, g.n)) return false;
        if (paw->attach != paw->triangle[0] && paw->attach != paw->triangle[1] &&
            paw->attach != paw->triangle[2])
            return false;
        auto ind = induced_subgraph(g, s);
        if (ind.g.m != 4) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!ind.g.has_edge(ind.to_new(paw->triangle[i]), ind.to_new(paw->triangle[j])))
                    return false;
        return ind.g.has_edge(ind.to_new(paw->attach), ind.to_new(paw->pendant));
    }
    const auto& hole = std::get<odd_hole>(cert);
    const auto& cyc = hole.cycle;
    const int len = static_cast<int>(cyc.size());
    if (len < 5 || len % 2 == 0) return false;
    vertex_set s(cyc);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    if (!is_valid_vertex_set(s, g.n)) return false;
    auto ind = induced_subgraph(g, s);
    if (ind.g.m != len) return false;  // exactly the cycle edges, hence chordless
    for (int i = 0; i < len; ++i)
        if (!ind.g.has_edge(ind.to_new(cyc[i]), ind.to_new(cyc[(i + 1) % len])))
            return false;
    return true;
}

}  // namespace perfcolor

#pragma once

// Brute-force reference implementations of the definitions the fast path
// is measured against: clique number, chromatic number, connected
// induced subgraph enumeration, the perfect-coloring predicate,
// perfectness, paw detection, and exhaustive perfect-colorability
// search. Deliberately independent of the recognition module; size
// limits are hard errors, never silent truncation.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "perfcolor/coloring.hpp"
#include "perfcolor/graph.hpp"
#include "perfcolor/recognition.hpp"

namespace perfcolor {

class oracle_limit_error : public std::runtime_error {
public:
    oracle_limit_error(const std::string& op, int n, int limit)
        : std::runtime_error(op + ": graph too large for oracle (n = " + std::to_string(n) +
                             ", limit " + std::to_string(limit) + ")") {}
};

namespace detail {

inline std::vector<std::uint64_t> bit_rows(const graph& g) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj(u)) rows[u] |= 1ull << v;
    return rows;
}

inline void expand_clique(const std::vector<std::uint64_t>& rows, std::uint64_t p, int rsize,
                          int& best) {
    if (p == 0) {
        best = std::max(best, rsize);
        return;
    }
    if (rsize + std::popcount(p) <= best) return;
    // branch on non-neighbors of a pivot chosen to cover most of p
    std::uint64_t t = p;
    int pivot = -1, cover = -1;
    while (t) {
        int v = std::countr_zero(t);
        t &= t - 1;
        int c = std::popcount(p & rows[v]);
        if (c > cover) {
            cover = c;
            pivot = v;
        }
    }
    std::uint64_t ext = p & ~rows[pivot];
    while (ext) {
        int v = std::countr_zero(ext);
        std::uint64_t vb = 1ull << v;
        ext &= ~vb;
        expand_clique(rows, p & rows[v], rsize + 1, best);
        p &= ~vb;
        if (rsize + std::popcount(p) <= best) return;
    }
}

inline int max_clique_in(const std::vector<std::uint64_t>& rows, std::uint64_t p) {
    int best = 0;
    expand_clique(rows, p, 0, best);
    return best;
}

inline bool connected_mask(const std::vector<std::uint64_t>& rows, std::uint64_t mask) {
    if (!mask) return false;
    std::uint64_t reach = mask & (~mask + 1);
    for (;;) {
        std::uint64_t next = reach;
        std::uint64_t t = reach;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            next |= rows[v] & mask;
        }
        if (next == reach) break;
        reach = next;
    }
    return reach == mask;
}

inline bool k_color_rec(const std::vector<std::uint64_t>& rows, const std::vector<int>& order,
                        std::vector<int>& col_of, std::size_t idx, int used, int k) {
    if (idx == order.size()) return true;
    int v = order[idx];
    int cap = std::min(used + 1, k);
    for (int c = 0; c < cap; ++c) {
        bool free = true;
        std::uint64_t nb = rows[v];
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (col_of[w] == c) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        col_of[v] = c;
        if (k_color_rec(rows, order, col_of, idx + 1, std::max(used, c + 1), k)) return true;
        col_of[v] = -1;
    }
    return false;
}

// Is the subgraph induced by mask colorable with k colors?
inline bool k_colorable_masked(const std::vector<std::uint64_t>& rows, std::uint64_t mask,
                               int k) {
    std::vector<int> order;
    std::uint64_t t = mask;
    while (t) {
        order.push_back(std::countr_zero(t));
        t &= t - 1;
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(rows[a] & mask) > std::popcount(rows[b] & mask);
    });
    if (k == 0) return order.empty();
    std::vector<int> col_of(rows.size(), -1);
    std::vector<std::uint64_t> masked(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) masked[v] = rows[v] & mask;
    return k_color_rec(masked, order, col_of, 0, 0, k);
}

}  // namespace detail

/// Exact clique number via branch and bound over 64-bit adjacency rows.
/// Requires n <= 64; the empty graph has clique number 0.
inline int max_clique(const graph& g) {
    if (g.n > 64) throw oracle_limit_error("max_clique", g.n, 64);
    if (g.n == 0) return 0;
    auto rows = detail::bit_rows(g);
    std::uint64_t full = (g.n == 64) ? ~0ull : (1ull << g.n) - 1;
    return detail::max_clique_in(rows, full);
}

/// Exact chromatic number by iterative deepening from the clique number.
/// Requires n <= 16.
inline int chromatic_number(const graph& g) {
    if (g.n > 16) throw oracle_limit_error("chromatic_number", g.n, 16);
    if (g.n == 0) return 0;
    auto rows = detail::bit_rows(g);
    std::uint64_t full = (1ull << g.n) - 1;
    for (int k = detail::max_clique_in(rows, full);; ++k)
        if (detail::k_colorable_masked(rows, full, k)) return k;
}

/// Visits every nonempty vertex set that induces a connected subgraph,
/// each exactly once, by recursive expansion from each anchor vertex
/// (vertices below the anchor are never added). The callback receives a
/// sorted vertex_set and may return bool (false stops the enumeration)
/// or void. Requires n <= 20.
template <class Fn>
inline void for_each_connected_induced_subgraph(const graph& g, Fn&& fn) {
    if (g.n > 20)
        throw oracle_limit_error("enumerate_connected_induced_subgraphs", g.n, 20);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj(u)) adj[u] |= 1u << v;

    vertex_set buf;
    bool stop = false;
    auto emit = [&](std::uint32_t s) -> bool {
        buf.clear();
        for (std::uint32_t t = s; t; t &= t - 1) buf.push_back(std::countr_zero(t));
        if constexpr (std::is_invocable_r_v<bool, Fn&, const vertex_set&>) {
            return static_cast<bool>(fn(buf));
        } else {
            fn(buf);
            return true;
        }
    };
    // ext: candidate extensions; closed: current set plus its whole
    // neighborhood (new candidates must come from outside it)
    auto extend = [&](auto&& self, std::uint32_t s, std::uint32_t ext, std::uint32_t closed,
                      std::uint32_t above) -> void {
        if (stop) return;
        if (!emit(s)) {
            stop = true;
            return;
        }
        while (ext && !stop) {
            int w = std::countr_zero(ext);
            std::uint32_t wb = 1u << w;
            ext &= ~wb;
            std::uint32_t excl = adj[w] & ~closed & above;
            self(self, s | wb, ext | excl, closed | adj[w] | wb, above);
        }
    };
    for (int a = 0; a < g.n && !stop; ++a) {
        std::uint32_t ab = 1u << a;
        std::uint32_t above = ~((ab << 1) - 1);
        extend(extend, ab, adj[a] & above, ab | adj[a], above);
    }
}

inline std::vector<vertex_set> connected_induced_subgraphs(const graph& g) {
    std::vector<vertex_set> out;
    for_each_connected_induced_subgraph(g, [&](const vertex_set& s) { out.push_back(s); });
    return out;
}

struct perfect_coloring_check {
    bool perfect = true;
    vertex_set violating;  // first set (in enumeration order) whose color count misses omega
};

/// Definitional check: a proper coloring is perfect iff every connected
/// induced subgraph uses exactly its clique number of colors. Rejects
/// improper colorings outright. Requires n <= 20.
inline perfect_coloring_check is_perfect_coloring(const graph& g, const coloring& c) {
    if (g.n > 20) throw oracle_limit_error("is_perfect_coloring", g.n, 20);
    auto pr = verify_proper(g, c);
    if (!pr.proper)
        throw std::invalid_argument("coloring is not proper: edge (" + std::to_string(pr.u) +
                                    ", " + std::to_string(pr.v) + ") is monochromatic");
    auto rows = detail::bit_rows(g);
    // remap colors to a dense range so a subgraph's palette fits a mask
    std::vector<int> palette(c.color);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<int> dense(c.color.size());
    for (std::size_t v = 0; v < c.color.size(); ++v)
        dense[v] = static_cast<int>(
            std::lower_bound(palette.begin(), palette.end(), c.color[v]) - palette.begin());

    perfect_coloring_check out;
    for_each_connected_induced_subgraph(g, [&](const vertex_set& s) -> bool {
        std::uint64_t mask = 0;
        std::uint32_t cols = 0;
        for (int v : s) {
            mask |= 1ull << v;
            cols |= 1u << dense[v];
        }
        if (std::popcount(cols) != detail::max_clique_in(rows, mask)) {
            out.perfect = false;
            out.violating = s;
            return false;
        }
        return true;
    });
    return out;
}

/// Enumerates every partition of the vertices into independent sets
/// (proper colorings up to color renaming). Blocks arrive in creation
/// order, each sorted. The callback may return bool (false stops) or
/// void. Requires n <= 12.
template <class Fn>
inline void for_each_independent_partition(const graph& g, Fn&& fn) {
    if (g.n > 12) throw oracle_limit_error("for_each_independent_partition", g.n, 12);
    auto rows = detail::bit_rows(g);
    std::vector<std::uint32_t> blocks;
    bool stop = false;
    auto deliver = [&]() -> bool {
        std::vector<vertex_set> parts;
        parts.reserve(blocks.size());
        for (std::uint32_t b : blocks) {
            vertex_set s;
            for (std::uint32_t t = b; t; t &= t - 1) s.push_back(std::countr_zero(t));
            parts.push_back(std::move(s));
        }
        if constexpr (std::is_invocable_r_v<bool, Fn&, const std::vector<vertex_set>&>) {
            return static_cast<bool>(fn(parts));
        } else {
            fn(parts);
            return true;
        }
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == g.n) {
            if (!deliver()) stop = true;
            return;
        }
        std::uint32_t vb = 1u << v;
        for (std::size_t i = 0; i < blocks.size() && !stop; ++i) {
            if (rows[v] & blocks[i]) continue;
            blocks[i] |= vb;
            self(self, v + 1);
            blocks[i] &= ~vb;
        }
        if (stop) return;
        blocks.push_back(vb);
        self(self, v + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

/// Exhaustive search for a perfect coloring over partitions into
/// independent sets. A partial partition is abandoned as soon as some
/// fully-placed connected subgraph carries the wrong number of colors;
/// that can never be repaired by later vertices. Requires n <= 9.
inline bool is_perfectly_colorable_bruteforce(const graph& g) {
    if (g.n > 9) throw oracle_limit_error("is_perfectly_colorable_bruteforce", g.n, 9);
    if (g.n == 0) return true;
    const int n = g.n;
    auto rows = detail::bit_rows(g);
    const std::uint32_t full = (1u << n) - 1;

    std::vector<int> omega(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int v = std::countr_zero(mask);
        omega[mask] = std::max(omega[mask & (mask - 1)],
                               1 + omega[mask & static_cast<std::uint32_t>(rows[v])]);
    }
    std::vector<std::vector<std::uint32_t>> by_top(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (detail::connected_mask(rows, mask))
            by_top[31 - std::countl_zero(mask)].push_back(mask);

    std::vector<std::uint32_t> blocks;
    auto ok_at = [&](int v) {
        for (std::uint32_t mask : by_top[v]) {
            int cnt = 0;
            for (std::uint32_t b : blocks) cnt += (b & mask) != 0;
            if (cnt != omega[mask]) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        std::uint32_t vb = 1u << v;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (rows[v] & blocks[i]) continue;
            blocks[i] |= vb;
            if (ok_at(v) && self(self, v + 1)) return true;
            blocks[i] &= ~vb;
        }
        blocks.push_back(vb);
        if (ok_at(v) && self(self, v + 1)) return true;
        blocks.pop_back();
        return false;
    };
    return rec(rec, 0);
}

/// Scans triangles and their neighborhoods for a vertex adjacent to
/// exactly one triangle corner. No size limit; O(m*n)-ish, fine at test
/// scale.
inline std::optional<induced_paw> find_paw_bruteforce(const graph& g) {
    for (int u = 0; u < g.n; ++u) {
        auto au = g.adj(u);
        for (int v : au) {
            if (v <= u) continue;
            for (int w : g.adj(v)) {
                if (w <= v || !std::binary_search(au.begin(), au.end(), w)) continue;
                for (int corner : {u, v, w}) {
                    for (int x : g.adj(corner)) {
                        if (x == u || x == v || x == w) continue;
                        int cnt = static_cast<int>(g.has_edge(x, u)) +
                                  static_cast<int>(g.has_edge(x, v)) +
                                  static_cast<int>(g.has_edge(x, w));
                        if (cnt != 1) continue;
                        int attach = g.has_edge(x, u) ? u : (g.has_edge(x, v) ? v : w);
                        return induced_paw{{u, v, w}, attach, x};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Perfectness straight from the definition: every induced subgraph must
/// be colorable with exactly its clique number of colors (the chromatic
/// number can never be smaller). Requires n <= 9.
inline bool is_perfect_bruteforce(const graph& g) {
    if (g.n > 9) throw oracle_limit_error("is_perfect_bruteforce", g.n, 9);
    if (g.n == 0) return true;
    auto rows = detail::bit_rows(g);
    const std::uint32_t full = (1u << g.n) - 1;
    std::vector<int> omega(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int v = std::countr_zero(mask);
        omega[mask] = std::max(omega[mask & (mask - 1)],
                               1 + omega[mask & static_cast<std::uint32_t>(rows[v])]);
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (!detail::k_colorable_masked(rows, mask, omega[mask])) return false;
    return true;
}

}  // namespace perfcolor

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <variant>

#include "perfcolor/recognition.hpp"
#include "test_util.hpp"

using namespace perfcolor;
namespace tu = test_util;

namespace {

vertex_set whole(const graph& g) {
    vertex_set s(static_cast<std::size_t>(g.n));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool valid_odd_cycle(const graph& g, const std::vector<int>& cyc) {
    if (cyc.size() < 3 || cyc.size() % 2 == 0) return false;
    vertex_set sorted(cyc);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    return true;
}

bool valid_cm_witness(const graph& g, const std::array<int, 3>& w) {
    auto [u, v, x] = w;
    return u != v && v != x && u != x && g.has_edge(u, v) && !g.has_edge(x, u) &&
           !g.has_edge(x, v);
}

// Partition soundness for a claimed complete multipartite component:
// parts cover the component once, each part is independent, and the edge
// count matches (|comp|^2 - sum |part|^2) / 2, which together force every
// cross-part pair to be an edge.
void check_cm_soundness(const graph& g, const vertex_set& comp,
                        const std::vector<vertex_set>& parts) {
    std::int64_t covered = 0, sq = 0, inside_edges = 0;
    for (const auto& part : parts) {
        covered += static_cast<std::int64_t>(part.size());
        sq += static_cast<std::int64_t>(part.size()) * static_cast<std::int64_t>(part.size());
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.has_edge(part[i], part[j])) ++inside_edges;
    }
    REQUIRE(covered == static_cast<std::int64_t>(comp.size()));
    CHECK(inside_edges == 0);
    std::int64_t m_comp = 0;
    for (int v : comp) m_comp += g.degree(v);
    m_comp /= 2;
    std::int64_t nc = static_cast<std::int64_t>(comp.size());
    CHECK(m_comp == (nc * nc - sq) / 2);
}

}  // namespace

TEST_CASE("check_bipartite on even cycle, odd cycle, single vertex") {
    graph c4 = tu::cycle_graph(4);
    auto r4 = check_bipartite(c4, whole(c4));
    REQUIRE(r4.is_bipartite);
    CHECK(r4.side_a == vertex_set{0, 2});
    CHECK(r4.side_b == vertex_set{1, 3});

    graph c5 = tu::cycle_graph(5);
    auto r5 = check_bipartite(c5, whole(c5));
    REQUIRE_FALSE(r5.is_bipartite);
    CHECK(r5.odd_cycle.size() == 5);
    CHECK(valid_odd_cycle(c5, r5.odd_cycle));

    graph k1 = build_graph(1, {});
    auto r1 = check_bipartite(k1, {0});
    REQUIRE(r1.is_bipartite);
    CHECK(r1.side_a == vertex_set{0});
    CHECK(r1.side_b.empty());
}

TEST_CASE("component checks reject sets that are not whole components") {
    graph g = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(check_bipartite(g, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(check_bipartite(g, {0, 1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(check_complete_multipartite(g, {3}), std::invalid_argument);
    CHECK_THROWS_AS(classify_component(g, vertex_set{}), std::invalid_argument);
}

TEST_CASE("check_complete_multipartite recovers the octahedron parts") {
    gen_spec spec;
    spec.k = gen_spec::kind::complete_multipartite;
    spec.part_sizes = {2, 2, 2};
    graph g = generate(spec);
    auto r = check_complete_multipartite(g, whole(g));
    REQUIRE(r.is_multipartite);
    REQUIRE(r.parts.size() == 3);
    CHECK(r.parts[0] == vertex_set{0, 1});
    CHECK(r.parts[1] == vertex_set{2, 3});
    CHECK(r.parts[2] == vertex_set{4, 5});
    // all 12 cross edges, verified pair by pair
    int cross = 0;
    for (std::size_t a = 0; a < r.parts.size(); ++a)
        for (std::size_t b = a + 1; b < r.parts.size(); ++b)
            for (int u : r.parts[a])
                for (int v : r.parts[b]) cross += g.has_edge(u, v) ? 1 : 0;
    CHECK(cross == 12);
}

TEST_CASE("check_complete_multipartite on K3 and on the paw") {
    graph k3 = tu::complete_graph(3);
    auto r = check_complete_multipartite(k3, whole(k3));
    REQUIRE(r.is_multipartite);
    REQUIRE(r.parts.size() == 3);
    CHECK(r.parts[0] == vertex_set{0});

    graph paw = tu::paw_graph();
    auto bad = check_complete_multipartite(paw, whole(paw));
    REQUIRE_FALSE(bad.is_multipartite);
    CHECK(bad.witness == std::array<int, 3>{0, 1, 3});
    CHECK(valid_cm_witness(paw, bad.witness));
}

TEST_CASE("parts are ordered by size descending then smallest vertex") {
    gen_spec spec;
    spec.k = gen_spec::kind::complete_multipartite;
    spec.part_sizes = {1, 3, 2};
    graph g = generate(spec);
    auto r = check_complete_multipartite(g, whole(g));
    REQUIRE(r.is_multipartite);
    REQUIRE(r.parts.size() == 3);
    CHECK(r.parts[0].size() == 3);
    CHECK(r.parts[1].size() == 2);
    CHECK(r.parts[2].size() == 1);
    CHECK(r.parts[0] == vertex_set{1, 2, 3});
}

TEST_CASE("classify_component picks the expected class") {
    graph c6 = tu::cycle_graph(6);
    CHECK(std::holds_alternative<bipartite_class>(classify_component(c6, whole(c6))));

    graph k4 = tu::complete_graph(4);
    auto cls = classify_component(k4, whole(k4));
    auto* cm = std::get_if<multipartite_class>(&cls);
    REQUIRE(cm != nullptr);
    CHECK(cm->parts.size() == 4);

    graph paw = tu::paw_graph();
    auto pcls = classify_component(paw, whole(paw));
    auto* neither = std::get_if<neither_class>(&pcls);
    REQUIRE(neither != nullptr);
    auto* cert = std::get_if<induced_paw>(&neither->cert);
    REQUIRE(cert != nullptr);
    CHECK(cert->triangle == std::array<int, 3>{0, 1, 2});
    CHECK(cert->attach == 2);
    CHECK(cert->pendant == 3);
}

TEST_CASE("complete bipartite components report as bipartite") {
    graph g = tu::complete_bipartite(2, 3);
    CHECK(std::holds_alternative<bipartite_class>(classify_component(g, whole(g))));
}

TEST_CASE("extract_certificate finds the canonical odd hole in C5") {
    graph c5 = tu::cycle_graph(5);
    auto cert = extract_certificate(c5, whole(c5));
    auto* hole = std::get_if<odd_hole>(&cert);
    REQUIRE(hole != nullptr);
    CHECK(hole->cycle == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(validate_certificate(c5, cert));
}

TEST_CASE("extract_certificate finds a paw in paw and bowtie") {
    graph paw = tu::paw_graph();
    auto cert = extract_certificate(paw, whole(paw));
    auto* p = std::get_if<induced_paw>(&cert);
    REQUIRE(p != nullptr);
    CHECK(p->triangle == std::array<int, 3>{0, 1, 2});
    CHECK(p->pendant == 3);
    CHECK(validate_certificate(paw, cert));

    graph bow = tu::bowtie_graph();
    // establish independently that the bowtie contains an induced paw
    bool some_paw = false;
    for (std::uint32_t mask = 0; mask < (1u << bow.n); ++mask) {
        if (std::popcount(mask) != 4) continue;
        vertex_set s;
        for (std::uint32_t t = mask; t; t &= t - 1)
            s.push_back(static_cast<int>(std::countr_zero(t)));
        auto es = tu::edges_in_subset(bow, s);
        if (es.size() != 4) continue;
        int deg3 = 0, deg1 = 0;
        for (int v : s) {
            int d = 0;
            for (auto [a, b] : es) d += (a == v) + (b == v);
            deg3 += d == 3;
            deg1 += d == 1;
        }
        if (deg3 == 1 && deg1 == 1) some_paw = true;
    }
    REQUIRE(some_paw);
    auto bcert = extract_certificate(bow, whole(bow));
    auto* bp = std::get_if<induced_paw>(&bcert);
    REQUIRE(bp != nullptr);
    CHECK(bp->triangle == std::array<int, 3>{0, 1, 2});
    CHECK(bp->attach == 2);
    CHECK(bp->pendant == 3);
    CHECK(validate_certificate(bow, bcert));
}

TEST_CASE("extract_certificate finds a shortest odd hole among competing cycles") {
    // C7 with one chord: the chord splits it into an even C4 and an odd
    // C5, and the C5 is the only chordless odd cycle
    graph g = build_graph(
        7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
    auto cert = extract_certificate(g, whole(g));
    auto* hole = std::get_if<odd_hole>(&cert);
    REQUIRE(hole != nullptr);
    CHECK(hole->cycle == std::vector<int>{0, 3, 4, 5, 6});
    CHECK(validate_certificate(g, cert));

    // Petersen graph: triangle-free, girth 5, heavily symmetric
    std::vector<edge> pe;
    for (int i = 0; i < 5; ++i) {
        pe.emplace_back(i, (i + 1) % 5);          // outer cycle
        pe.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        pe.emplace_back(i, 5 + i);                // spokes
    }
    graph petersen = build_graph(10, pe);
    auto pcert = extract_certificate(petersen, whole(petersen));
    auto* phole = std::get_if<odd_hole>(&pcert);
    REQUIRE(phole != nullptr);
    CHECK(phole->cycle.size() == 5);
    CHECK(validate_certificate(petersen, pcert));
}

TEST_CASE("extract_certificate refuses accepting components") {
    graph c4 = tu::cycle_graph(4);
    CHECK_THROWS_AS(extract_certificate(c4, whole(c4)), std::invalid_argument);
    graph k4 = tu::complete_graph(4);
    CHECK_THROWS_AS(extract_certificate(k4, whole(k4)), std::invalid_argument);
}

TEST_CASE("recognize on unions and rejects") {
    graph pos = tu::disjoint_union({tu::complete_bipartite(3, 3), tu::complete_graph(4)});
    auto rep = recognize(pos);
    CHECK(rep.perfectly_colorable);
    REQUIRE(rep.classes.size() == 2);
    CHECK(std::holds_alternative<bipartite_class>(rep.classes[0]));
    CHECK(std::holds_alternative<multipartite_class>(rep.classes[1]));

    auto paw_rep = recognize(tu::paw_graph());
    CHECK_FALSE(paw_rep.perfectly_colorable);
    REQUIRE(paw_rep.classes.size() == 1);
    auto* nc = std::get_if<neither_class>(&paw_rep.classes[0]);
    REQUIRE(nc != nullptr);
    CHECK(std::holds_alternative<induced_paw>(nc->cert));

    auto c5_rep = recognize(tu::cycle_graph(5));
    CHECK_FALSE(c5_rep.perfectly_colorable);
    auto* c5nc = std::get_if<neither_class>(&c5_rep.classes[0]);
    REQUIRE(c5nc != nullptr);
    CHECK(std::holds_alternative<odd_hole>(c5nc->cert));

    CHECK(recognize(graph{}).perfectly_colorable);
}

TEST_CASE("recognition output is sound on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        graph g = tu::random_gnp(4 + static_cast<int>(seed % 9), 0.15 + 0.07 * (seed % 9),
                                 seed * 13 + 1);
        auto rep = recognize(g);
        auto comps = component_vertex_sets(g, rep.labeling);
        REQUIRE(rep.classes.size() == comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (const auto* bip = std::get_if<bipartite_class>(&rep.classes[i])) {
                vertex_set both(bip->side_a);
                both.insert(both.end(), bip->side_b.begin(), bip->side_b.end());
                std::sort(both.begin(), both.end());
                CHECK(both == comps[i]);
                CHECK(tu::edges_in_subset(g, bip->side_a).empty());
                CHECK(tu::edges_in_subset(g, bip->side_b).empty());
                CHECK(!bip->side_a.empty());
                CHECK(bip->side_a.front() == comps[i].front());
            } else if (const auto* cm = std::get_if<multipartite_class>(&rep.classes[i])) {
                check_cm_soundness(g, comps[i], cm->parts);
            } else {
                CHECK(validate_certificate(g, std::get<neither_class>(rep.classes[i]).cert));
            }
        }
    }
}

namespace {

// Definition-level reference classifiers, independent of the library's
// neighborhood-partition machinery.
bool naive_bipartite(const graph& g, const vertex_set& comp) {
    auto ind = induced_subgraph(g, comp);
    return tu::naive_k_colorable(ind.g, 2);
}

bool naive_complete_multipartite(const graph& g, const vertex_set& comp) {
    // parts = connected components of the complement; then every cross
    // pair must be an edge and every part independent
    auto ind = induced_subgraph(g, comp);
    const graph& h = ind.g;
    std::vector<edge> co_edges;
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v)
            if (!h.has_edge(u, v)) co_edges.emplace_back(u, v);
    auto parts = connected_components(build_graph(h.n, co_edges));
    for (int u = 0; u < h.n; ++u)
        for (int v = u + 1; v < h.n; ++v) {
            bool same = parts.component_id[u] == parts.component_id[v];
            if (same && h.has_edge(u, v)) return false;
            if (!same && !h.has_edge(u, v)) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("classification agrees with definition-level checks") {
    int bip = 0, cm = 0, neither = 0;
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        graph g = tu::random_gnp(3 + static_cast<int>(seed % 6),
                                 0.15 + 0.09 * (seed % 9), seed * 17 + 3);
        auto labeling = connected_components(g);
        for (const auto& comp : component_vertex_sets(g, labeling)) {
            bool want_bip = naive_bipartite(g, comp);
            bool want_cm = naive_complete_multipartite(g, comp);
            auto cls = classify_component(g, comp);
            INFO("seed " << seed << " comp of size " << comp.size());
            if (want_bip) {
                CHECK(std::holds_alternative<bipartite_class>(cls));
                ++bip;
            } else if (want_cm) {
                CHECK(std::holds_alternative<multipartite_class>(cls));
                ++cm;
            } else {
                CHECK(std::holds_alternative<neither_class>(cls));
                ++neither;
            }
            auto b = check_bipartite(g, comp);
            CHECK(b.is_bipartite == want_bip);
            auto m = check_complete_multipartite(g, comp);
            CHECK(m.is_multipartite == want_cm);
            if (!m.is_multipartite) CHECK(valid_cm_witness(g, m.witness));
            if (!b.is_bipartite) CHECK(valid_odd_cycle(g, b.odd_cycle));
        }
    }
    // the sample covered all three outcomes
    CHECK(bip > 0);
    CHECK(cm > 0);
    CHECK(neither > 0);
}

TEST_CASE("multipartite soundness identity at a 200-vertex component") {
    gen_spec spec;
    spec.k = gen_spec::kind::complete_multipartite;
    spec.part_sizes = {80, 70, 49, 1};
    graph g = generate(spec);
    REQUIRE(g.n == 200);
    auto r = check_complete_multipartite(g, whole(g));
    REQUIRE(r.is_multipartite);
    check_cm_soundness(g, whole(g), r.parts);
    std::vector<std::size_t> sizes;
    for (const auto& part : r.parts) sizes.push_back(part.size());
    CHECK(sizes == std::vector<std::size_t>{80, 70, 49, 1});
}

TEST_CASE("the verdict is invariant under relabeling") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        graph g = tu::random_gnp(9, 0.2 + 0.06 * (seed % 10), seed);
        auto pi = tu::random_permutation(g.n, seed ^ 0xabcdef);
        CHECK(recognize(g).perfectly_colorable ==
              recognize(tu::permuted(g, pi)).perfectly_colorable);
    }
}

TEST_CASE("validate_certificate rejects corrupted certificates") {
    graph paw = tu::paw_graph();
    CHECK(validate_certificate(paw, induced_paw{{0, 1, 2}, 2, 3}));
    CHECK_FALSE(validate_certificate(paw, induced_paw{{0, 1, 2}, 0, 3}));  // wrong attach
    CHECK_FALSE(validate_certificate(paw, induced_paw{{0, 1, 3}, 3, 2}));  // not a triangle
    CHECK_FALSE(validate_certificate(paw, induced_paw{{0, 1, 2}, 2, 2}));  // repeated vertex

    graph c5 = tu::cycle_graph(5);
    CHECK(validate_certificate(c5, odd_hole{{0, 1, 2, 3, 4}}));
    CHECK_FALSE(validate_certificate(c5, odd_hole{{0, 1, 2, 4, 3}}));  // wrong order
    graph c6 = tu::cycle_graph(6);
    CHECK_FALSE(validate_certificate(c6, odd_hole{{0, 1, 2, 3, 4, 5}}));  // even
    graph c7_chord = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0},
                                     {0, 2}});
    CHECK_FALSE(validate_certificate(c7_chord, odd_hole{{0, 1, 2, 3, 4, 5, 6}}));  // chord
}

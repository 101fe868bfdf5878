#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "perfcolor/oracle.hpp"
#include "perfcolor/recognition.hpp"
#include "test_util.hpp"

using namespace perfcolor;
namespace tu = test_util;

TEST_CASE("max_clique against exhaustive subset search") {
    CHECK(max_clique(tu::complete_graph(5)) == 5);
    CHECK(max_clique(tu::cycle_graph(5)) == 2);
    REQUIRE(tu::naive_omega(tu::paw_graph()) == 3);
    CHECK(max_clique(tu::paw_graph()) == 3);
    CHECK(max_clique(graph{}) == 0);
    CHECK(max_clique(build_graph(3, {})) == 1);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        graph g = tu::random_gnp(10, 0.2 + 0.06 * (seed % 10), seed);
        CHECK(max_clique(g) == tu::naive_omega(g));
    }
}

TEST_CASE("max_clique size limit") {
    gen_spec spec;
    spec.k = gen_spec::kind::gnp;
    spec.n_a = 65;
    spec.p = 0.0;
    CHECK_THROWS_AS(max_clique(generate(spec)), oracle_limit_error);
}

TEST_CASE("chromatic_number on named graphs and against naive search") {
    CHECK(chromatic_number(tu::complete_graph(4)) == 4);
    CHECK(chromatic_number(tu::cycle_graph(5)) == 3);
    CHECK(chromatic_number(tu::cycle_graph(4)) == 2);
    CHECK(chromatic_number(graph{}) == 0);
    CHECK(chromatic_number(build_graph(2, {})) == 1);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        graph g = tu::random_gnp(6, 0.3 + 0.05 * (seed % 8), seed + 5);
        CHECK(chromatic_number(g) == tu::naive_chromatic(g));
    }
}

TEST_CASE("chromatic_number is at least the clique number") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        graph g = tu::random_gnp(9, 0.4, seed);
        CHECK(chromatic_number(g) >= max_clique(g));
    }
}

TEST_CASE("connected induced subgraph enumeration on tiny graphs") {
    auto path_sets = connected_induced_subgraphs(tu::path_graph(3));
    std::set<vertex_set> got(path_sets.begin(), path_sets.end());
    std::set<vertex_set> want{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}};
    CHECK(got == want);
    CHECK(path_sets.size() == 6);  // {0,2} is disconnected and must be absent

    CHECK(connected_induced_subgraphs(build_graph(1, {})).size() == 1);
    CHECK(connected_induced_subgraphs(tu::complete_graph(3)).size() == 7);
    CHECK(connected_induced_subgraphs(graph{}).empty());
}

TEST_CASE("enumeration yields each connected set exactly once") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        int n = 4 + static_cast<int>(seed % 4);
        graph g = tu::random_gnp(n, 0.35, seed * 3 + 1);
        auto sets = connected_induced_subgraphs(g);
        std::set<vertex_set> unique_sets(sets.begin(), sets.end());
        CHECK(unique_sets.size() == sets.size());
        CHECK(sets.size() == tu::naive_connected_masks(g).size());
    }
}

TEST_CASE("is_perfect_coloring matches the definition") {
    graph paw = tu::paw_graph();
    auto res = is_perfect_coloring(paw, {{0, 1, 2, 0}, 3});
    REQUIRE_FALSE(res.perfect);
    // with this coloring {0,2,3} has colors {0,2} but {1,2,3} carries
    // three on a clique-number-2 path, and it is the only violator
    CHECK(res.violating == vertex_set{1, 2, 3});

    graph c4 = tu::cycle_graph(4);
    // verified against the naive enumeration below
    for (std::uint32_t mask : tu::naive_connected_masks(c4)) {
        vertex_set s;
        for (std::uint32_t t = mask; t; t &= t - 1)
            s.push_back(static_cast<int>(std::countr_zero(t)));
        int colors[4] = {0, 1, 0, 1};
        std::set<int> used;
        for (int v : s) used.insert(colors[v]);
        auto ind = induced_subgraph(c4, s);
        REQUIRE(static_cast<int>(used.size()) == tu::naive_omega(ind.g));
    }
    CHECK(is_perfect_coloring(c4, {{0, 1, 0, 1}, 2}).perfect);

    CHECK(is_perfect_coloring(build_graph(1, {}), {{0}, 1}).perfect);
    CHECK_THROWS_AS(is_perfect_coloring(tu::complete_graph(2), {{0, 0}, 1}),
                    std::invalid_argument);
}

TEST_CASE("is_perfectly_colorable_bruteforce on the named graphs") {
    CHECK_FALSE(is_perfectly_colorable_bruteforce(tu::paw_graph()));
    CHECK_FALSE(is_perfectly_colorable_bruteforce(tu::cycle_graph(5)));
    CHECK(is_perfectly_colorable_bruteforce(tu::cycle_graph(4)));
    CHECK(is_perfectly_colorable_bruteforce(graph{}));
    CHECK(is_perfectly_colorable_bruteforce(tu::complete_graph(5)));
    CHECK_THROWS_AS(is_perfectly_colorable_bruteforce(tu::random_gnp(10, 0.5, 1)),
                    oracle_limit_error);
}

TEST_CASE("pruned colorability search agrees with unpruned partition enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        graph g = tu::random_gnp(7, 0.15 + 0.07 * (seed % 10), seed * 7 + 3);
        bool naive = false;
        for_each_independent_partition(g, [&](const std::vector<vertex_set>& blocks) -> bool {
            coloring c;
            c.color.assign(static_cast<std::size_t>(g.n), 0);
            for (std::size_t b = 0; b < blocks.size(); ++b)
                for (int v : blocks[b]) c.color[v] = static_cast<int>(b);
            c.palette_size = static_cast<int>(blocks.size());
            if (is_perfect_coloring(g, c).perfect) {
                naive = true;
                return false;
            }
            return true;
        });
        INFO("seed " << seed);
        CHECK(is_perfectly_colorable_bruteforce(g) == naive);
    }
}

TEST_CASE("every proper coloring of the paw overloads one of its two paths") {
    graph paw = tu::paw_graph();
    int partitions = 0;
    for_each_independent_partition(paw, [&](const std::vector<vertex_set>& blocks) {
        ++partitions;
        auto colors_on = [&](const vertex_set& s) {
            std::set<std::size_t> used;
            for (int v : s)
                for (std::size_t b = 0; b < blocks.size(); ++b)
                    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v))
                        used.insert(b);
            return used.size();
        };
        bool acd = colors_on({0, 2, 3}) == 3;
        bool bcd = colors_on({1, 2, 3}) == 3;
        CHECK((acd || bcd));
    });
    CHECK(partitions == 3);  // {a}{b}{c}{d}, {a,d}{b}{c}, {b,d}{a}{c}
}

TEST_CASE("find_paw_bruteforce") {
    auto paw = find_paw_bruteforce(tu::paw_graph());
    REQUIRE(paw.has_value());
    CHECK(paw->triangle == std::array<int, 3>{0, 1, 2});
    CHECK(paw->attach == 2);
    CHECK(paw->pendant == 3);
    CHECK(validate_certificate(tu::paw_graph(), certificate{*paw}));

    CHECK_FALSE(find_paw_bruteforce(tu::cycle_graph(5)).has_value());
    CHECK_FALSE(find_paw_bruteforce(tu::complete_graph(4)).has_value());
    CHECK(find_paw_bruteforce(tu::bowtie_graph()).has_value());

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        graph g = tu::random_gnp(8, 0.35, seed);
        auto found = find_paw_bruteforce(g);
        // cross-check against 4-subset enumeration
        bool expected = false;
        for (std::uint32_t mask = 0; mask < (1u << g.n) && !expected; ++mask) {
            if (std::popcount(mask) != 4) continue;
            vertex_set s;
            for (std::uint32_t t = mask; t; t &= t - 1)
                s.push_back(static_cast<int>(std::countr_zero(t)));
            auto es = tu::edges_in_subset(g, s);
            if (es.size() != 4) continue;
            int deg3 = 0, deg1 = 0;
            for (int v : s) {
                int d = 0;
                for (auto [a, b] : es) d += (a == v) + (b == v);
                deg3 += d == 3;
                deg1 += d == 1;
            }
            expected = deg3 == 1 && deg1 == 1;
        }
        CHECK(found.has_value() == expected);
        if (found) CHECK(validate_certificate(g, certificate{*found}));
    }
}

TEST_CASE("is_perfect_bruteforce separates the classics") {
    CHECK_FALSE(is_perfect_bruteforce(tu::cycle_graph(5)));
    CHECK_FALSE(is_perfect_bruteforce(tu::cycle_graph(7)));
    CHECK(is_perfect_bruteforce(tu::paw_graph()));  // perfect but not perfectly colorable
    CHECK(is_perfect_bruteforce(tu::complete_graph(5)));
    CHECK(is_perfect_bruteforce(graph{}));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        gen_spec spec;
        spec.k = gen_spec::kind::bipartite;
        spec.n_a = 4;
        spec.n_b = 5;
        spec.p = 0.5;
        CHECK(is_perfect_bruteforce(generate(spec, seed)));
    }
}

TEST_CASE("is_perfect_bruteforce equals a per-subset chi == omega sweep") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        graph g = tu::random_gnp(6, 0.4, seed * 11);
        bool expected = true;
        for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
            vertex_set s;
            for (std::uint32_t t = mask; t; t &= t - 1)
                s.push_back(static_cast<int>(std::countr_zero(t)));
            auto ind = induced_subgraph(g, s);
            if (tu::naive_chromatic(ind.g) != tu::naive_omega(ind.g)) {
                expected = false;
                break;
            }
        }
        CHECK(is_perfect_bruteforce(g) == expected);
    }
}

TEST_CASE("omega never grows on induced subgraphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        graph g = tu::random_gnp(8, 0.5, seed + 40);
        int whole = max_clique(g);
        for_each_connected_induced_subgraph(g, [&](const vertex_set& s) {
            CHECK(max_clique(induced_subgraph(g, s).g) <= whole);
        });
    }
}

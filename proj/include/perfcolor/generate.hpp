#pragma once

// Seeded instance generators. Everything is reproducible bit for bit:
// the pseudo-random stream is splitmix64 (public xorshift-multiply
// constants, pinned below), Bernoulli draws compare the top 53 bits of
// one stream value against floor(p * 2^53) so no platform-dependent
// floating point sneaks in, and G(n,p)-style kinds draw one value per
// vertex pair in lexicographic pair order.
//
// Text form (the `gen` CLI subcommand):
//   cmp:2,2,2            complete multipartite with the given part sizes
//   bip:3x4:p=0.5        random bipartite, sides 3 and 4
//   gnp:100:p=0.1        Erdos-Renyi G(n,p)
//   union:(A)+(B)+...    disjoint union, members vertex-offset in order
//   pawed:(A)            A plus a fresh paw wired to it by one edge
// each optionally followed by :seed=<u64>. Union members and a pawed
// base without an explicit seed get one drawn from the parent's stream
// (one draw per member, in order).

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perfcolor/graph.hpp"

namespace perfcolor {

struct splitmix64 {
    std::uint64_t state = 0;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    bool bernoulli(double p) {
        std::uint64_t threshold =
            p >= 1.0 ? (1ull << 53)
                     : (p <= 0.0 ? 0 : static_cast<std::uint64_t>(p * 9007199254740992.0));
        return (next() >> 11) < threshold;
    }

    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

struct gen_spec {
    enum class kind { bipartite, complete_multipartite, gnp, disjoint_union, planted_paw };

    kind k = kind::gnp;
    int n_a = 0;                        // bipartite side a / gnp vertex count
    int n_b = 0;                        // bipartite side b
    double p = 0.0;                     // edge probability
    std::vector<int> part_sizes;        // complete multipartite
    std::vector<gen_spec> children;     // union members / planted-paw base
    std::optional<std::uint64_t> seed;  // explicit seed from the text form
};

inline graph generate(const gen_spec& spec, std::uint64_t default_seed = 0) {
    const std::uint64_t seed = spec.seed.value_or(default_seed);
    switch (spec.k) {
        case gen_spec::kind::bipartite: {
            if (spec.p < 0.0 || spec.p > 1.0)
                throw graph_error("edge probability must lie in [0, 1]");
            if (spec.n_a < 0 || spec.n_b < 0)
                throw graph_error("bipartite side sizes must be non-negative");
            splitmix64 rng(seed);
            std::vector<edge> edges;
            for (int i = 0; i < spec.n_a; ++i)
                for (int j = 0; j < spec.n_b; ++j)
                    if (rng.bernoulli(spec.p)) edges.emplace_back(i, spec.n_a + j);
            return build_graph(spec.n_a + spec.n_b, edges);
        }
        case gen_spec::kind::complete_multipartite: {
            if (spec.part_sizes.empty())
                throw graph_error("complete multipartite needs at least one part");
            int n = 0;
            std::vector<int> start;
            for (int s : spec.part_sizes) {
                if (s <= 0) throw graph_error("part sizes must be positive");
                start.push_back(n);
                n += s;
            }
            std::vector<edge> edges;
            for (std::size_t i = 0; i < spec.part_sizes.size(); ++i)
                for (std::size_t j = i + 1; j < spec.part_sizes.size(); ++j)
                    for (int u = start[i]; u < start[i] + spec.part_sizes[i]; ++u)
                        for (int v = start[j]; v < start[j] + spec.part_sizes[j]; ++v)
                            edges.emplace_back(u, v);
            return build_graph(n, edges);
        }
        case gen_spec::kind::gnp: {
            if (spec.p < 0.0 || spec.p > 1.0)
                throw graph_error("edge probability must lie in [0, 1]");
            if (spec.n_a < 0) throw graph_error("vertex count must be non-negative");
            splitmix64 rng(seed);
            std::vector<edge> edges;
            for (int i = 0; i < spec.n_a; ++i)
                for (int j = i + 1; j < spec.n_a; ++j)
                    if (rng.bernoulli(spec.p)) edges.emplace_back(i, j);
            return build_graph(spec.n_a, edges);
        }
        case gen_spec::kind::disjoint_union: {
            splitmix64 rng(seed);
            std::vector<edge> edges;
            int offset = 0;
            for (const auto& child : spec.children) {
                std::uint64_t child_seed = rng.next();  // one draw per member, always
                graph g = generate(child, child_seed);
                for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
                offset += g.n;
            }
            return build_graph(offset, edges);
        }
        case gen_spec::kind::planted_paw: {
            splitmix64 rng(seed);
            std::uint64_t base_seed = rng.next();
            graph base = generate(spec.children.front(), base_seed);
            std::vector<edge> edges = base.edges();
            const int a = base.n, b = base.n + 1, c = base.n + 2, d = base.n + 3;
            edges.emplace_back(a, b);
            edges.emplace_back(a, c);
            edges.emplace_back(b, c);
            edges.emplace_back(c, d);  // pendant hangs off c
            if (base.n > 0)
                edges.emplace_back(a, static_cast<int>(rng.below(
                                          static_cast<std::uint64_t>(base.n))));
            return build_graph(base.n + 4, edges);
        }
    }
    throw graph_error("unknown generator kind");
}

namespace detail {

struct spec_parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw graph_error("generator spec: " + msg + " (offset " + std::to_string(pos) +
                          " in '" + std::string(s) + "')");
    }

    bool eat(std::string_view tok) {
        if (s.substr(pos, tok.size()) != tok) return false;
        pos += tok.size();
        return true;
    }

    template <class T>
    T number(const char* what) {
        T value{};
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc{}) fail(std::string("expected ") + what);
        pos = static_cast<std::size_t>(ptr - s.data());
        return value;
    }

    gen_spec parse_spec() {
        gen_spec out;
        if (eat("cmp:")) {
            out.k = gen_spec::kind::complete_multipartite;
            out.part_sizes.push_back(number<int>("part size"));
            while (eat(",")) out.part_sizes.push_back(number<int>("part size"));
            for (int s : out.part_sizes)
                if (s <= 0) fail("part sizes must be positive");
        } else if (eat("bip:")) {
            out.k = gen_spec::kind::bipartite;
            out.n_a = number<int>("side size");
            if (!eat("x")) fail("expected 'x' between side sizes");
            out.n_b = number<int>("side size");
            if (!eat(":p=")) fail("expected ':p='");
            out.p = number<double>("probability");
            if (out.n_a < 0 || out.n_b < 0) fail("side sizes must be non-negative");
            if (out.p < 0.0 || out.p > 1.0) fail("probability must lie in [0, 1]");
        } else if (eat("gnp:")) {
            out.k = gen_spec::kind::gnp;
            out.n_a = number<int>("vertex count");
            if (!eat(":p=")) fail("expected ':p='");
            out.p = number<double>("probability");
            if (out.n_a < 0) fail("vertex count must be non-negative");
            if (out.p < 0.0 || out.p > 1.0) fail("probability must lie in [0, 1]");
        } else if (eat("union:")) {
            out.k = gen_spec::kind::disjoint_union;
            out.children.push_back(parse_group());
            while (eat("+")) out.children.push_back(parse_group());
        } else if (eat("pawed:")) {
            out.k = gen_spec::kind::planted_paw;
            out.children.push_back(parse_group());
        } else {
            fail("expected one of cmp: bip: gnp: union: pawed:");
        }
        if (eat(":seed=")) out.seed = number<std::uint64_t>("seed");
        return out;
    }

    gen_spec parse_group() {
        if (!eat("(")) fail("expected '('");
        gen_spec inner = parse_spec();
        if (!eat(")")) fail("expected ')'");
        return inner;
    }
};

}  // namespace detail

inline gen_spec parse_gen_spec(std::string_view text) {
    detail::spec_parser parser{text};
    gen_spec out = parser.parse_spec();
    if (parser.pos != text.size()) parser.fail("trailing characters");
    return out;
}

}  // namespace perfcolor

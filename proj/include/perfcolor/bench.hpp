#pragma once

// Scaling benchmark for the recognize + color pipeline. Times exclude
// generation and parsing; the measured work is exactly the two
// algorithms. The headline number is the least-squares slope of
// log(median total time) against log(n + m), which should sit near 1
// for a linear-time pipeline.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "perfcolor/coloring.hpp"
#include "perfcolor/generate.hpp"
#include "perfcolor/graph.hpp"
#include "perfcolor/recognition.hpp"

namespace perfcolor {

struct bench_row {
    std::int64_t n = 0, m = 0;
    std::uint64_t recognize_ns = 0, color_ns = 0;
    int trial = 0;
};

struct bench_result {
    std::vector<bench_row> rows;
    // log-log slope of median (recognize + color) time vs n + m; NaN
    // when fewer than two distinct sizes were measured
    double slope = std::numeric_limits<double>::quiet_NaN();
};

/// Default positive instance family for a target n + m: a complete
/// bipartite component K_{2,B} plus a complete multipartite component
/// with parts (C, 3, 2). Both are edge-linear in their vertex counts, so
/// building the instance costs O(target) as well.
inline gen_spec default_bench_spec(std::int64_t target, std::uint64_t seed) {
    gen_spec bip;
    bip.k = gen_spec::kind::bipartite;
    bip.n_a = 2;
    bip.n_b = static_cast<int>(std::max<std::int64_t>(1, target / 6));
    bip.p = 1.0;
    gen_spec cm;
    cm.k = gen_spec::kind::complete_multipartite;
    cm.part_sizes = {static_cast<int>(std::max<std::int64_t>(1, target / 12)), 3, 2};
    gen_spec u;
    u.k = gen_spec::kind::disjoint_union;
    u.children = {std::move(bip), std::move(cm)};
    u.seed = seed;
    return u;
}

inline double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(points.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0) return std::numeric_limits<double>::quiet_NaN();
    return (k * sxy - sx * sy) / denom;
}

inline bench_result run_scaling_bench(const std::vector<std::int64_t>& sizes, int trials,
                                      const std::function<graph(std::int64_t)>& make) {
    using clock = std::chrono::steady_clock;
    static volatile std::int64_t sink = 0;  // keeps the timed work observable
    bench_result out;
    std::vector<std::pair<double, double>> points;
    for (std::int64_t size : sizes) {
        graph g = make(size);
        std::vector<double> totals;
        for (int t = 0; t < trials; ++t) {
            auto t0 = clock::now();
            recognition_report rep = recognize(g);
            auto t1 = clock::now();
            std::uint64_t color_ns = 0;
            if (rep.perfectly_colorable) {
                coloring col = perfect_coloring(g, rep);
                auto t2 = clock::now();
                color_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
                sink = sink + col.palette_size;
            }
            auto recognize_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
            sink = sink + static_cast<std::int64_t>(rep.classes.size());
            out.rows.push_back({g.n, g.m, recognize_ns, color_ns, t});
            totals.push_back(static_cast<double>(recognize_ns + color_ns));
        }
        if (!totals.empty()) {
            std::sort(totals.begin(), totals.end());
            double median = totals[totals.size() / 2];
            points.emplace_back(static_cast<double>(g.n + g.m), std::max(median, 1.0));
        }
    }
    // collapse duplicate sizes before fitting
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [](auto& a, auto& b) { return a.first == b.first; }),
                 points.end());
    out.slope = fit_loglog_slope(points);
    return out;
}

inline std::string bench_csv(const std::vector<bench_row>& rows) {
    std::ostringstream os;
    os << "n,m,recognize_ns,color_ns,trial\n";
    for (const auto& r : rows)
        os << r.n << "," << r.m << "," << r.recognize_ns << "," << r.color_ns << ","
           << r.trial << "\n";
    return os.str();
}

}  // namespace perfcolor

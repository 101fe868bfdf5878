// perfcolor: decides whether a graph admits a perfect coloring (a proper
// coloring in which every connected induced subgraph uses exactly its
// clique number of colors), produces such a coloring or a small
// obstruction certificate, cross-checks against brute-force oracles, and
// benchmarks the linear-time pipeline.
//
// Exit codes: 0 positive / success, 10 negative with certificate,
// 11 verification failure, 2 input error, 3 oracle scale exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perfcolor/bench.hpp"
#include "perfcolor/coloring.hpp"
#include "perfcolor/generate.hpp"
#include "perfcolor/graph.hpp"
#include "perfcolor/io.hpp"
#include "perfcolor/oracle.hpp"
#include "perfcolor/recognition.hpp"

namespace pc = perfcolor;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 2;
constexpr int exit_oracle_scale = 3;
constexpr int exit_not_colorable = 10;
constexpr int exit_verify_failed = 11;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pc::graph_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pc::graph_error("cannot write '" + path + "'");
    out << content;
}

struct loaded_graph {
    pc::parsed_graph pg;
    std::uint64_t parse_ns = 0;
};

loaded_graph load_graph(const std::string& path, const std::string& format_flag) {
    std::string text = read_file(path);
    pc::graph_format fmt;
    if (format_flag == "dimacs")
        fmt = pc::graph_format::dimacs;
    else if (format_flag == "edgelist")
        fmt = pc::graph_format::edgelist;
    else
        fmt = pc::sniff_format(text, path);
    auto t0 = std::chrono::steady_clock::now();
    loaded_graph out{pc::parse_graph(text, fmt), 0};
    auto t1 = std::chrono::steady_clock::now();
    out.parse_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    for (const auto& w : out.pg.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
    return out;
}

// Certificates are reported in the labels of the input file (1-based for
// DIMACS, 0-based for edge lists) so they can be checked against it.
std::string certificate_text(const pc::certificate& cert,
                             const std::vector<std::int64_t>& labels) {
    std::ostringstream os;
    if (const auto* paw = std::get_if<pc::induced_paw>(&cert)) {
        os << "induced-paw " << labels[paw->triangle[0]] << " " << labels[paw->triangle[1]]
           << " " << labels[paw->triangle[2]] << " " << labels[paw->pendant];
    } else {
        const auto& hole = std::get<pc::odd_hole>(cert);
        os << "odd-hole";
        for (int v : hole.cycle) os << " " << labels[v];
    }
    return os.str();
}

json certificate_json(const pc::certificate& cert, const std::vector<std::int64_t>& labels) {
    json j;
    if (const auto* paw = std::get_if<pc::induced_paw>(&cert)) {
        j["type"] = "induced-paw";
        j["triangle"] = {labels[paw->triangle[0]], labels[paw->triangle[1]],
                         labels[paw->triangle[2]]};
        j["attach"] = labels[paw->attach];
        j["pendant"] = labels[paw->pendant];
    } else {
        const auto& hole = std::get<pc::odd_hole>(cert);
        j["type"] = "odd-hole";
        j["cycle"] = json::array();
        for (int v : hole.cycle) j["cycle"].push_back(labels[v]);
    }
    return j;
}

const pc::certificate* first_certificate(const pc::recognition_report& rep) {
    for (const auto& cls : rep.classes)
        if (const auto* nc = std::get_if<pc::neither_class>(&cls)) return &nc->cert;
    return nullptr;
}

struct timing {
    std::uint64_t parse_ns = 0, recognize_ns = 0, color_ns = 0;
};

json report_json(const pc::graph& g, const pc::recognition_report& rep,
                 const std::vector<std::int64_t>& labels,
                 const std::optional<pc::coloring>& col, const timing& t) {
    json j;
    j["verdict"] = rep.perfectly_colorable;
    j["vertices"] = g.n;
    j["edges"] = g.m;
    j["components"] = json::array();
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        json c;
        c["id"] = i;
        if (const auto* bip = std::get_if<pc::bipartite_class>(&rep.classes[i])) {
            c["class"] = "bipartite";
            c["size"] = bip->side_a.size() + bip->side_b.size();
            c["side_sizes"] = {bip->side_a.size(), bip->side_b.size()};
        } else if (const auto* cm = std::get_if<pc::multipartite_class>(&rep.classes[i])) {
            c["class"] = "complete-multipartite";
            std::size_t total = 0;
            c["part_sizes"] = json::array();
            for (const auto& part : cm->parts) {
                c["part_sizes"].push_back(part.size());
                total += part.size();
            }
            c["size"] = total;
        } else {
            c["class"] = "neither";
        }
        j["components"].push_back(std::move(c));
    }
    if (rep.perfectly_colorable) {
        if (col) j["palette_size"] = col->palette_size;
    } else {
        j["certificate"] = certificate_json(*first_certificate(rep), labels);
    }
    j["timing_ns"] = {{"parse", t.parse_ns}, {"recognize", t.recognize_ns},
                      {"color", t.color_ns}};
    return j;
}

void print_human_report(std::ostream& os, const pc::graph& g,
                        const pc::recognition_report& rep,
                        const std::vector<std::int64_t>& labels,
                        const std::optional<pc::coloring>& col, const timing& t) {
    os << "vertices: " << g.n << "  edges: " << g.m
       << "  components: " << rep.labeling.component_count << "\n";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        os << "component " << i << ": ";
        if (const auto* bip = std::get_if<pc::bipartite_class>(&rep.classes[i])) {
            os << "bipartite (sides " << bip->side_a.size() << "+" << bip->side_b.size()
               << ")";
        } else if (const auto* cm = std::get_if<pc::multipartite_class>(&rep.classes[i])) {
            os << "complete-multipartite (parts";
            for (const auto& part : cm->parts) os << " " << part.size();
            os << ")";
        } else {
            os << "neither (obstruction found)";
        }
        os << "\n";
    }
    os << "verdict: " << (rep.perfectly_colorable ? "perfectly colorable"
                                                  : "not perfectly colorable")
       << "\n";
    if (rep.perfectly_colorable && col)
        os << "palette: " << col->palette_size << " colors\n";
    if (!rep.perfectly_colorable)
        os << "certificate: " << certificate_text(*first_certificate(rep), labels) << "\n";
    auto ms = [](std::uint64_t ns) { return static_cast<double>(ns) / 1e6; };
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "timing: parse " << ms(t.parse_ns) << " ms, recognize " << ms(t.recognize_ns)
       << " ms, color " << ms(t.color_ns) << " ms\n";
    os.unsetf(std::ios::fixed);
}

int cmd_recognize(const std::string& path, const std::string& format, bool as_json) {
    auto lg = load_graph(path, format);
    const pc::graph& g = lg.pg.g;
    timing t{lg.parse_ns, 0, 0};
    auto t0 = std::chrono::steady_clock::now();
    pc::recognition_report rep = pc::recognize(g);
    auto t1 = std::chrono::steady_clock::now();
    t.recognize_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    std::optional<pc::coloring> col;
    if (rep.perfectly_colorable) {
        col = pc::perfect_coloring(g, rep);
        auto t2 = std::chrono::steady_clock::now();
        t.color_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
    }
    if (as_json)
        std::cout << report_json(g, rep, lg.pg.labels, col, t).dump(2) << "\n";
    else
        print_human_report(std::cout, g, rep, lg.pg.labels, col, t);
    return rep.perfectly_colorable ? exit_ok : exit_not_colorable;
}

int cmd_color(const std::string& path, const std::string& format, const std::string& out_path,
              bool as_json) {
    auto lg = load_graph(path, format);
    const pc::graph& g = lg.pg.g;
    timing t{lg.parse_ns, 0, 0};
    auto t0 = std::chrono::steady_clock::now();
    pc::recognition_report rep = pc::recognize(g);
    auto t1 = std::chrono::steady_clock::now();
    t.recognize_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    if (!rep.perfectly_colorable) {
        if (as_json)
            std::cout << report_json(g, rep, lg.pg.labels, std::nullopt, t).dump(2) << "\n";
        else
            print_human_report(std::cout, g, rep, lg.pg.labels, std::nullopt, t);
        return exit_not_colorable;
    }
    pc::coloring col = pc::perfect_coloring(g, rep);
    auto t2 = std::chrono::steady_clock::now();
    t.color_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
    if (!out_path.empty()) {
        write_file(out_path, pc::write_coloring(col));
        if (as_json)
            std::cout << report_json(g, rep, lg.pg.labels, col, t).dump(2) << "\n";
        else
            print_human_report(std::cout, g, rep, lg.pg.labels, col, t);
    } else if (as_json) {
        std::cout << report_json(g, rep, lg.pg.labels, col, t).dump(2) << "\n";
    } else {
        std::cout << pc::write_coloring(col);
        print_human_report(std::cerr, g, rep, lg.pg.labels, col, t);
    }
    return exit_ok;
}

std::string set_text(const pc::vertex_set& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               const std::string& mode, const std::string& format) {
    auto lg = load_graph(graph_path, format);
    const pc::graph& g = lg.pg.g;
    pc::coloring col = pc::parse_coloring(read_file(coloring_path), g.n);
    if (mode == "perfect" && g.n > 20) {
        std::cerr << "oracle scale exceeded: perfect mode handles at most 20 vertices, got "
                  << g.n << "\n";
        return exit_oracle_scale;
    }
    auto pr = pc::verify_proper(g, col);
    if (!pr.proper) {
        std::cout << "improper: edge (" << pr.u << ", " << pr.v << ") has color "
                  << col.color[pr.u] << " on both endpoints\n";
        return exit_verify_failed;
    }
    if (mode == "proper") {
        std::cout << "proper: " << g.m << " edges checked, palette " << col.palette_size
                  << "\n";
        return exit_ok;
    }
    auto check = pc::is_perfect_coloring(g, col);
    if (check.perfect) {
        std::cout << "perfect: every connected induced subgraph uses exactly its clique "
                     "number of colors\n";
        return exit_ok;
    }
    auto ind = pc::induced_subgraph(g, check.violating);
    pc::vertex_set colors;
    for (int v : check.violating) colors.push_back(col.color[v]);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    std::cout << "not perfect: " << set_text(check.violating) << ": " << colors.size()
              << " colors, clique number " << pc::max_clique(ind.g) << "\n";
    return exit_verify_failed;
}

std::uint64_t default_gen_seed() {
    if (const char* env = std::getenv("PERFCOLOR_SEED")) {
        std::uint64_t v = 0;
        std::string s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw pc::graph_error("PERFCOLOR_SEED is not a valid unsigned integer: '" + s +
                                  "'");
        return v;
    }
    return 0;
}

int cmd_gen(const std::string& spec_text, const std::string& out_path) {
    pc::gen_spec spec = pc::parse_gen_spec(spec_text);
    pc::graph g = pc::generate(spec, default_gen_seed());
    std::string body = pc::write_edgelist(g);
    if (out_path.empty())
        std::cout << body;
    else
        write_file(out_path, body);
    std::cerr << "generated " << g.n << " vertices, " << g.m << " edges\n";
    return exit_ok;
}

int cmd_bench(const std::string& sizes_text, int trials, const std::string& csv_path,
              const std::string& spec_template, std::uint64_t seed) {
    std::vector<std::int64_t> sizes;
    std::size_t pos = 0;
    while (pos < sizes_text.size()) {
        std::size_t comma = sizes_text.find(',', pos);
        std::string tok = sizes_text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        if (!tok.empty()) {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
                throw pc::graph_error("bad size '" + tok + "' in --sizes");
            sizes.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    auto make = [&](std::int64_t size) -> pc::graph {
        std::uint64_t instance_seed = pc::splitmix64(seed ^ static_cast<std::uint64_t>(size)).next();
        if (!spec_template.empty()) {
            std::string text = spec_template;
            const std::string token = "{size}";
            for (std::size_t at = text.find(token); at != std::string::npos;
                 at = text.find(token, at))
                text.replace(at, token.size(), std::to_string(size));
            return pc::generate(pc::parse_gen_spec(text), instance_seed);
        }
        return pc::generate(pc::default_bench_spec(size, instance_seed));
    };
    pc::bench_result result = pc::run_scaling_bench(sizes, trials, make);
    std::string csv = pc::bench_csv(result.rows);
    std::ostringstream slope_line;
    if (std::isnan(result.slope))
        slope_line << "log-log slope: n/a (need at least two distinct sizes)\n";
    else
        slope_line << "log-log slope: " << result.slope << " (median recognize+color time vs n+m)\n";
    if (csv_path.empty()) {
        std::cout << csv;
        std::cerr << slope_line.str();
    } else {
        write_file(csv_path, csv);
        std::cout << slope_line.str();
    }
    return exit_ok;
}

int cmd_oracle(const std::string& op, const std::string& path, const std::string& format) {
    auto lg = load_graph(path, format);
    const pc::graph& g = lg.pg.g;
    if (op == "omega") {
        std::cout << pc::max_clique(g) << "\n";
        return exit_ok;
    }
    if (op == "chi") {
        std::cout << pc::chromatic_number(g) << "\n";
        return exit_ok;
    }
    if (op == "subgraphs") {
        std::int64_t count = 0;
        pc::for_each_connected_induced_subgraph(g, [&](const pc::vertex_set&) { ++count; });
        std::cout << count << "\n";
        return exit_ok;
    }
    if (op == "perfect") {
        std::cout << (pc::is_perfect_bruteforce(g) ? "true" : "false") << "\n";
        return exit_ok;
    }
    if (op == "colorable") {
        bool ok = pc::is_perfectly_colorable_bruteforce(g);
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? exit_ok : exit_not_colorable;
    }
    if (op == "paw") {
        auto paw = pc::find_paw_bruteforce(g);
        if (!paw) {
            std::cout << "none\n";
            return exit_ok;
        }
        std::cout << certificate_text(pc::certificate{*paw}, lg.pg.labels) << "\n";
        return exit_not_colorable;
    }
    throw pc::graph_error("unknown oracle op '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect-coloring recognizer, colorer, and verifier"};
    app.require_subcommand(1);

    std::string input, coloring_path, out_path, format = "auto", mode = "proper";
    std::string spec_text, sizes = "10000,31623,100000,316228,1000000", csv_path,
                spec_template, oracle_op;
    bool as_json = false;
    int trials = 5;
    std::uint64_t bench_seed = 1;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "input format")
            ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}))
            ->capture_default_str();
    };

    auto* rec = app.add_subcommand("recognize", "decide perfect colorability");
    rec->add_option("input", input, "graph file")->required();
    add_format(rec);
    rec->add_flag("--json", as_json, "machine-readable report");

    auto* col = app.add_subcommand("color", "emit a perfect coloring");
    col->add_option("input", input, "graph file")->required();
    col->add_option("--out", out_path, "coloring output path (default: stdout)");
    add_format(col);
    col->add_flag("--json", as_json, "machine-readable report");

    auto* ver = app.add_subcommand("verify", "check a coloring against a graph");
    ver->add_option("graph", input, "graph file")->required();
    ver->add_option("coloring", coloring_path, "coloring file")->required();
    ver->add_option("--mode", mode, "predicate to check")
        ->check(CLI::IsMember({"proper", "perfect"}))
        ->capture_default_str();
    add_format(ver);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("spec", spec_text, "instance spec, e.g. cmp:2,2,2:seed=1")->required();
    gen->add_option("--out", out_path, "output path (default: stdout)");

    auto* ben = app.add_subcommand("bench", "scaling benchmark of recognize + color");
    ben->add_option("--sizes", sizes, "comma-separated target n+m values")
        ->capture_default_str();
    ben->add_option("--trials", trials, "trials per size")->capture_default_str();
    ben->add_option("--csv", csv_path, "CSV output path (default: stdout)");
    ben->add_option("--spec-template", spec_template,
                    "instance spec with {size} placeholder (default: built-in family)");
    ben->add_option("--seed", bench_seed, "base seed")->capture_default_str();

    auto* ora = app.add_subcommand("oracle", "brute-force reference checks");
    ora->add_option("op", oracle_op, "one of omega chi perfect colorable paw subgraphs")
        ->required()
        ->check(CLI::IsMember({"omega", "chi", "perfect", "colorable", "paw", "subgraphs"}));
    ora->add_option("input", input, "graph file")->required();
    add_format(ora);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (app.got_subcommand(rec)) return cmd_recognize(input, format, as_json);
        if (app.got_subcommand(col)) return cmd_color(input, format, out_path, as_json);
        if (app.got_subcommand(ver)) return cmd_verify(input, coloring_path, mode, format);
        if (app.got_subcommand(gen)) return cmd_gen(spec_text, out_path);
        if (app.got_subcommand(ben))
            return cmd_bench(sizes, trials, csv_path, spec_template, bench_seed);
        if (app.got_subcommand(ora)) return cmd_oracle(oracle_op, input, format);
    } catch (const pc::oracle_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_oracle_scale;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

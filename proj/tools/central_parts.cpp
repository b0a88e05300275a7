#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centralparts/errors.hpp"
#include "centralparts/gch.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/golden.hpp"
#include "centralparts/graph.hpp"
#include "centralparts/report.hpp"
#include "centralparts/scan.hpp"

namespace {

using namespace centralparts;

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

Graph load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_edge_list(text.str());
}

Graph graph_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string family =
        colon == std::string::npos ? spec : spec.substr(0, colon);
    std::vector<int> params;
    try {
        if (colon != std::string::npos)
            for (const std::string& tok : split(spec.substr(colon + 1), ','))
                params.push_back(parse_int(tok));
        if (family == "gstar" || family == "broom") {
            if (!params.empty())
                throw std::invalid_argument(family + " takes no parameters");
            return family == "gstar" ? fixture_gstar() : fixture_broom();
        }
        return generate(family, params);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, "bad generator spec '" + spec + "': " + e.what());
    }
}

CountMode parse_mode(const std::string& s) {
    if (s == "induced") return CountMode::Induced;
    if (s == "edge") return CountMode::EdgeSubgraph;
    throw std::invalid_argument("unknown count mode: " + s);
}

// CENTRAL_PARTS_CAP = "N" for both caps or "I,E"; raising it is unsafe by
// design (counting is exponential).
CountCaps caps_from_env() {
    CountCaps caps;
    const char* env = std::getenv("CENTRAL_PARTS_CAP");
    if (!env || !*env) return caps;
    std::string s(env);
    try {
        auto comma = s.find(',');
        if (comma == std::string::npos) {
            caps.induced = caps.edge = parse_int(s);
        } else {
            caps.induced = parse_int(s.substr(0, comma));
            caps.edge = parse_int(s.substr(comma + 1));
        }
    } catch (const std::exception&) {
        throw ParseError(0, "bad CENTRAL_PARTS_CAP value: " + s);
    }
    return caps;
}

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

struct InputArgs {
    std::string input;
    std::string gen;

    Graph load() const {
        if (input.empty() == gen.empty())
            throw std::invalid_argument(
                "exactly one of --input or --gen is required");
        return input.empty() ? graph_from_spec(gen) : load_input(input);
    }
    std::string name() const {
        return input.empty() ? gen : basename_of(input);
    }
};

int cmd_compute(const InputArgs& in, const std::string& parts,
                const std::string& mode, const std::string& format,
                bool timings) {
    Graph g = in.load();
    ComputeOptions opts;
    opts.mode = parse_mode(mode);
    opts.caps = caps_from_env();
    if (!parts.empty()) opts.parts = split(parts, ',');
    opts.timings = timings;
    CentralPartsReport r = compute_report(g, in.name(), opts);
    std::cout << (format == "table" ? render_table(r) : render_json(r));
    return 0;
}

int cmd_gch(const InputArgs& in, bool allow_disconnected,
            const std::string& format) {
    Graph g = in.load();
    if (!allow_disconnected && !g.connected())
        throw NotConnectedError(
            "input graph not connected (pass --allow-disconnected to attach "
            "anyway)");
    GchResult r = build_gch(g);
    if (format == "edges") {
        std::cout << serialize(r.graph);
        return 0;
    }
    nlohmann::json j = nlohmann::json::object();
    j["n"] = r.graph.n();
    j["m"] = r.graph.m();
    j["labels"] = r.graph.labels();
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : r.graph.edges())
        edges.push_back({r.graph.label(a), r.graph.label(b)});
    j["edges"] = edges;
    j["expected_mu"] = r.expected_mu;
    j["expected_fiedler"] = r.expected_fiedler;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(bool list_only) {
    if (list_only) {
        for (const std::string& name : golden_check_names())
            std::cout << name << "\n";
        return 0;
    }
    int passed = 0;
    std::vector<CheckResult> results = run_golden_checks();
    for (const CheckResult& r : results) {
        if (r.passed) {
            ++passed;
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int cmd_scan(int random_samples, int tree_samples, int n, double p,
             uint64_t seed, const std::string& mode) {
    if (random_samples < 0 || tree_samples < 0 ||
        random_samples + tree_samples == 0)
        throw std::invalid_argument(
            "need at least one sample via --random or --trees");
    if (n < 1) throw std::invalid_argument("--n must be at least 1");
    ScanOptions opts;
    opts.random_samples = random_samples;
    opts.tree_samples = tree_samples;
    opts.n = n;
    opts.p = p;
    opts.seed = seed;
    opts.mode = parse_mode(mode);
    opts.caps = caps_from_env();
    std::cout << run_scan(opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six central parts of connected graphs"};
    app.require_subcommand(1);

    InputArgs compute_in, gch_in;
    std::string parts, mode = "induced", format = "json";
    bool timings = false;
    auto* compute =
        app.add_subcommand("compute", "central parts of one graph");
    compute->add_option("--input", compute_in.input, "edge-list file");
    compute->add_option("--gen", compute_in.gen,
                        "generator spec, e.g. path:6, circulant:8,1,3, gstar");
    compute->add_option("--parts", parts,
                        "comma-separated subset of the six part names");
    compute->add_option("--mode", mode, "induced|edge")
        ->check(CLI::IsMember({"induced", "edge"}));
    compute->add_option("--format", format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    compute->add_flag("--timings", timings, "include per-part timings");

    bool allow_disconnected = false;
    std::string gch_format = "json";
    auto* gch = app.add_subcommand(
        "gch", "attach the four-vertex supergraph with known Fiedler data");
    gch->add_option("--input", gch_in.input, "edge-list file");
    gch->add_option("--gen", gch_in.gen, "generator spec");
    gch->add_flag("--allow-disconnected", allow_disconnected,
                  "accept a disconnected input graph");
    gch->add_option("--format", gch_format, "json|edges")
        ->check(CLI::IsMember({"json", "edges"}));

    bool list_only = false;
    auto* verify = app.add_subcommand("verify", "run the fixture suite");
    verify->add_flag("--list", list_only, "list check names without running");

    int random_samples = 0, tree_samples = 0, scan_n = 10;
    double scan_p = 0.35;
    uint64_t scan_seed = 1;
    std::string scan_mode = "induced";
    auto* scan =
        app.add_subcommand("scan", "collect conjecture evidence on random graphs");
    scan->add_option("--random", random_samples,
                     "number of connected G(n,p) samples");
    scan->add_option("--trees", tree_samples, "number of random tree samples");
    scan->add_option("--n", scan_n, "vertex count per sample");
    scan->add_option("--p", scan_p, "edge probability for G(n,p)");
    scan->add_option("--seed", scan_seed, "base seed");
    scan->add_option("--mode", scan_mode, "induced|edge")
        ->check(CLI::IsMember({"induced", "edge"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return cmd_compute(compute_in, parts, mode, format, timings);
        if (gch->parsed())
            return cmd_gch(gch_in, allow_disconnected, gch_format);
        if (verify->parsed()) return cmd_verify(list_only);
        if (scan->parsed())
            return cmd_scan(random_samples, tree_samples, scan_n, scan_p,
                            scan_seed, scan_mode);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotConnectedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

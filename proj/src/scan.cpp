#include "centralparts/scan.hpp"

#include <map>
#include <random>
#include <vector>

#include <json.hpp>

#include "centralparts/centers.hpp"
#include "centralparts/errors.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/metric.hpp"
#include "centralparts/spectral.hpp"

namespace centralparts {

namespace {

using nlohmann::json;

json scan_sample(const Graph& g, int index, const std::string& family,
                 const ScanOptions& opts) {
    json rec = json::object();
    rec["index"] = index;
    rec["family"] = family;
    rec["n"] = g.n();
    rec["m"] = g.m();

    std::map<std::string, VertexSet> parts;
    std::vector<std::string> skipped;
    if (g.n() == 1) {
        for (const char* p : {"center", "median", "security_center",
                              "characteristic_center", "subgraph_core",
                              "core_vertices"})
            parts[p] = {0};
    } else {
        DistanceMatrix dm = apsp(g);
        parts["center"] = center(dm);
        parts["median"] = median(dm);
        parts["security_center"] = security_center(security_table(dm));
        parts["characteristic_center"] = characteristic_center(g);
        try {
            parts["subgraph_core"] = subgraph_core(g, opts.mode, opts.caps);
        } catch (const CapExceededError&) {
            skipped.emplace_back("subgraph_core");
        }
        try {
            parts["core_vertices"] = core_vertices(g, opts.mode, opts.caps);
        } catch (const CapExceededError&) {
            skipped.emplace_back("core_vertices");
        }
    }

    BlockDecomposition bd = blocks(g);
    bool violation = false;
    for (const char* p : {"subgraph_core", "core_vertices"}) {
        auto it = parts.find(p);
        if (it == parts.end()) continue;
        bool contained = contained_in_some_block(bd, it->second);
        rec[std::string(p) + "_in_block"] = contained;
        violation = violation || !contained;
    }

    std::vector<std::string> full;
    for (const auto& [name, s] : parts)
        if (static_cast<int>(s.size()) == g.n()) full.push_back(name);
    rec["parts_equal_v"] = full;
    if (!skipped.empty()) rec["skipped"] = skipped;
    if (violation) rec["edges"] = serialize(g);
    return rec;
}

}  // namespace

std::string run_scan(const ScanOptions& opts) {
    const int total = opts.random_samples + opts.tree_samples;
    std::vector<json> records(total);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < total; ++i) {
        // Per-sample seed: the report is identical however the samples are
        // scheduled across threads.
        std::mt19937_64 rng(derive_seed(opts.seed, static_cast<uint64_t>(i)));
        bool tree_sample = i >= opts.random_samples;
        try {
            Graph g = tree_sample ? random_tree(opts.n, rng)
                                  : random_connected_gnp(opts.n, opts.p, rng);
            records[i] =
                scan_sample(g, i, tree_sample ? "tree" : "gnp", opts);
        } catch (const std::exception& e) {
            records[i] = {{"index", i}, {"error", e.what()}};
        }
    }

    int sc_violations = 0, core_violations = 0, part_equal_v = 0, errors = 0;
    int skipped_parts = 0;
    for (const json& rec : records) {
        if (rec.contains("error")) {
            ++errors;
            continue;
        }
        if (rec.contains("subgraph_core_in_block") &&
            !rec["subgraph_core_in_block"].get<bool>())
            ++sc_violations;
        if (rec.contains("core_vertices_in_block") &&
            !rec["core_vertices_in_block"].get<bool>())
            ++core_violations;
        if (!rec["parts_equal_v"].empty()) ++part_equal_v;
        if (rec.contains("skipped"))
            skipped_parts += static_cast<int>(rec["skipped"].size());
    }

    json out = json::object();
    out["options"] = {{"random", opts.random_samples},
                      {"trees", opts.tree_samples},
                      {"n", opts.n},
                      {"p", opts.p},
                      {"seed", opts.seed},
                      {"count_mode", to_string(opts.mode)}};
    out["samples"] = records;
    out["summary"] = {{"samples", total},
                      {"errors", errors},
                      {"subgraph_core_violations", sc_violations},
                      {"core_vertices_violations", core_violations},
                      {"samples_with_part_equal_v", part_equal_v},
                      {"skipped_parts", skipped_parts}};
    return out.dump(2) + "\n";
}

}  // namespace centralparts

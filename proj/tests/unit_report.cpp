#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "centralparts/errors.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/golden.hpp"
#include "centralparts/report.hpp"

using namespace centralparts;

TEST_CASE("full report on a path") {
    CentralPartsReport r = compute_report(make_path(6), "path:6");
    CHECK(r.graph_name == "path:6");
    CHECK(r.n == 6);
    CHECK(r.m == 5);
    CHECK_FALSE(r.partial);
    CHECK(r.skipped.empty());
    REQUIRE(r.mu.has_value());
    CHECK(r.fiedler_multiplicity == 1);
    std::vector<std::string> mid = {"3", "4"};
    for (const std::string& p : part_names()) {
        REQUIRE(r.parts.count(p) == 1);
        CHECK(r.parts.at(p) == mid);
    }
}

TEST_CASE("part filter produces a partial report") {
    ComputeOptions opts;
    opts.parts = {"median", "center"};
    CentralPartsReport r = compute_report(make_path(6), "path:6", opts);
    CHECK(r.partial);
    CHECK(r.parts.size() == 2);
    CHECK(r.parts.count("center") == 1);
    CHECK(r.parts.count("median") == 1);
    CHECK(r.parts.count("subgraph_core") == 0);

    CHECK(render_json(r) ==
          "{\n"
          "  \"center\": [\n"
          "    \"3\",\n"
          "    \"4\"\n"
          "  ],\n"
          "  \"median\": [\n"
          "    \"3\",\n"
          "    \"4\"\n"
          "  ]\n"
          "}\n");
}

TEST_CASE("unknown part names are rejected") {
    ComputeOptions opts;
    opts.parts = {"centre"};
    CHECK_THROWS_AS(compute_report(make_path(4), "p", opts),
                    std::invalid_argument);
}

TEST_CASE("disconnected and empty graphs are rejected") {
    CHECK_THROWS_AS(compute_report(make_empty(3), "e"), NotConnectedError);
    CHECK_THROWS_AS(compute_report(Graph::build({}, {}), "none"),
                    std::invalid_argument);
}

TEST_CASE("single-vertex report has no spectral data") {
    CentralPartsReport r = compute_report(make_path(1), "path:1");
    CHECK_FALSE(r.mu.has_value());
    CHECK(r.fiedler_multiplicity == 0);
    for (const std::string& p : part_names())
        CHECK(r.parts.at(p) == std::vector<std::string>{"1"});
    std::string j = render_json(r);
    CHECK(j.find("\"mu\": null") != std::string::npos);
}

TEST_CASE("counting caps mark parts skipped") {
    CentralPartsReport r = compute_report(make_cycle(30), "cycle:30");
    CHECK(r.skipped == std::set<std::string>{"core_vertices", "subgraph_core"});
    CHECK(r.parts.count("center") == 1);
    CHECK(r.parts.count("characteristic_center") == 1);
    std::string j = render_json(r);
    CHECK(j.find("\"subgraph_core\": \"skipped(cap)\"") != std::string::npos);
    std::string table = render_table(r);
    CHECK(table.find("skipped(cap)") != std::string::npos);

    // A raised cap computes them.
    ComputeOptions opts;
    opts.caps.induced = 30;
    CentralPartsReport r2 = compute_report(make_cycle(30), "cycle:30", opts);
    CHECK(r2.skipped.empty());
    CHECK(r2.parts.at("subgraph_core").size() == 30);
}

TEST_CASE("json rendering is deterministic") {
    CentralPartsReport a = compute_report(fixture_gstar(), "gstar");
    CentralPartsReport b = compute_report(fixture_gstar(), "gstar");
    CHECK(render_json(a) == render_json(b));
    std::string j = render_json(a);
    CHECK(j.find("\"count_mode\": \"induced\"") != std::string::npos);
    CHECK(j.find("\"graph_name\": \"gstar\"") != std::string::npos);
    // Key order is alphabetical.
    CHECK(j.find("\"center\"") < j.find("\"characteristic_center\""));
    CHECK(j.find("\"characteristic_center\"") < j.find("\"median\""));
}

TEST_CASE("count mode is echoed") {
    ComputeOptions opts;
    opts.mode = CountMode::EdgeSubgraph;
    CentralPartsReport r = compute_report(make_cycle(5), "cycle:5", opts);
    std::string j = render_json(r);
    CHECK(j.find("\"count_mode\": \"edge\"") != std::string::npos);
}

TEST_CASE("timings are recorded on request") {
    ComputeOptions opts;
    opts.timings = true;
    opts.parts = {"center", "median"};
    CentralPartsReport r = compute_report(make_path(8), "path:8", opts);
    CHECK(r.timings_ms.size() == 2);
    CHECK(r.timings_ms.count("center") == 1);
    for (const auto& [k, v] : r.timings_ms) CHECK(v >= 0.0);

    CentralPartsReport quiet = compute_report(make_path(8), "path:8");
    CHECK(quiet.timings_ms.empty());
}

TEST_CASE("table rendering lists parts in canonical order") {
    CentralPartsReport r = compute_report(make_path(5), "path:5");
    std::string t = render_table(r);
    CHECK(t.find("graph: path:5") != std::string::npos);
    CHECK(t.find("mu: ") != std::string::npos);
    CHECK(t.find("center") < t.find("median"));
    CHECK(t.find("median") < t.find("security_center"));
    CHECK(t.find("core_vertices") != std::string::npos);
}

TEST_CASE("golden names match the executed checks") {
    std::vector<CheckResult> results = run_golden_checks();
    std::vector<std::string> names = golden_check_names();
    REQUIRE(results.size() == names.size());
    for (size_t i = 0; i < names.size(); ++i) {
        CHECK(results[i].name == names[i]);
        CHECK(results[i].passed);
        CHECK(results[i].detail.empty());
    }
}

TEST_CASE("a corrupted fixture fails its checks with details") {
    Graph g = fixture_gstar();
    // Re-hang leaf 8 off leaf 9: still connected, same counts of vertices
    // and edges, different geometry.
    std::vector<std::pair<int, int>> edges;
    int v7 = g.index_of("7"), v8 = g.index_of("8"), v9 = g.index_of("9");
    for (auto [u, v] : g.edges()) {
        if ((u == v7 && v == v8) || (u == v8 && v == v7))
            edges.emplace_back(v8, v9);
        else
            edges.emplace_back(u, v);
    }
    Graph bad = Graph::build(g.labels(), edges);
    REQUIRE(bad.connected());
    REQUIRE(bad.m() == g.m());

    std::vector<CheckResult> results = run_gstar_checks(bad);
    bool any_failed = false;
    for (const CheckResult& r : results)
        if (!r.passed) {
            any_failed = true;
            CHECK_FALSE(r.detail.empty());
        }
    CHECK(any_failed);
}

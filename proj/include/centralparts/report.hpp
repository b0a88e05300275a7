#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "centralparts/graph.hpp"
#include "centralparts/subgraph_count.hpp"

namespace centralparts {

// The six part names in canonical order: center, median, security_center,
// characteristic_center, subgraph_core, core_vertices.
const std::vector<std::string>& part_names();

struct CentralPartsReport {
    std::string graph_name;
    int n = 0;
    int m = 0;
    CountMode mode = CountMode::Induced;
    std::map<std::string, std::vector<std::string>> parts;  // computed parts
    std::set<std::string> skipped;  // parts the counting caps refused
    std::optional<double> mu;       // absent on a single vertex
    int fiedler_multiplicity = 0;   // 0 on a single vertex
    bool partial = false;           // part filter active: render parts only
    std::map<std::string, double> timings_ms;  // filled only on request
};

struct ComputeOptions {
    CountMode mode = CountMode::Induced;
    CountCaps caps{};
    std::vector<std::string> parts;  // empty = all six
    bool timings = false;
};

// All requested parts of a connected graph, with shared distance and
// spectral work done once. A counting cap marks its part skipped instead of
// failing. Throws NotConnectedError on disconnected input and
// std::invalid_argument on unknown part names.
CentralPartsReport compute_report(const Graph& g, const std::string& name,
                                  const ComputeOptions& opts = {});

// Key-sorted JSON; identical reports render byte-identically. A filtered
// report renders as just the parts object.
std::string render_json(const CentralPartsReport& r);

// Aligned table for humans.
std::string render_table(const CentralPartsReport& r);

}  // namespace centralparts

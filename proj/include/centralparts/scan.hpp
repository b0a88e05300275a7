#pragma once

#include <cstdint>
#include <string>

#include "centralparts/subgraph_count.hpp"

namespace centralparts {

struct ScanOptions {
    int random_samples = 0;  // G(n,p) conditioned on connectivity
    int tree_samples = 0;    // uniform random labeled trees
    int n = 10;
    double p = 0.35;
    std::uint64_t seed = 1;
    CountMode mode = CountMode::Induced;
    CountCaps caps{};
};

// Evidence collection over random graphs, as JSON: per sample, whether the
// subgraph core and the core vertices land inside a single block (the four
// other parts are guaranteed to), and which parts equal the whole vertex
// set. A containment violation is reported with its edge list but never
// fails the run — it would be a finding, not a bug. Deterministic for a
// fixed seed; samples are keyed by index.
std::string run_scan(const ScanOptions& opts);

}  // namespace centralparts

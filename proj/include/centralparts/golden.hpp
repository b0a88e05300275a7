#pragma once

#include <string>
#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty when passed, named mismatch otherwise
};

// Check names in run order.
std::vector<std::string> golden_check_names();

// The full fixture suite: the 15-vertex fixture, the broom tree, path and
// star closed forms, and the supergraph construction's spectral ground truth.
std::vector<CheckResult> run_golden_checks();

// The 15-vertex fixture's checks against a caller-supplied graph, so a
// corrupted copy can serve as a negative control.
std::vector<CheckResult> run_gstar_checks(const Graph& g);

}  // namespace centralparts

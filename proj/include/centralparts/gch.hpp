#pragma once

#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

// The input graph with four extra vertices: a pendant pair u1-u2 in front,
// u3-u4 behind, and u2, u3 each joined to every original vertex (2n+2 new
// edges). The result is always connected and its characteristic center is
// exactly the original vertex set; mu and a Fiedler vector are known in
// closed form.
struct GchResult {
    Graph graph;  // vertex order u1, u2, originals, u3, u4
    double expected_mu = 0.0;  // (n + 2 - sqrt(n^2 + 4)) / 2, inside (0,1)
    std::vector<double> expected_fiedler;  // (1, 1-mu, 0,...,0, mu-1, -1)
};

// Accepts any simple graph with n >= 1, disconnected included; throws
// std::invalid_argument when a label collides with u1..u4.
GchResult build_gch(const Graph& g);

}  // namespace centralparts

#include "centralparts/gch.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace centralparts {

GchResult build_gch(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("construction needs n >= 1");

    std::vector<std::string> labels;
    labels.reserve(n + 4);
    labels.emplace_back("u1");
    labels.emplace_back("u2");
    for (const std::string& l : g.labels()) {
        if (l == "u1" || l == "u2" || l == "u3" || l == "u4")
            throw std::invalid_argument("input label collides with u1..u4: " + l);
        labels.push_back(l);
    }
    labels.emplace_back("u3");
    labels.emplace_back("u4");

    // Indices: u1=0, u2=1, originals 2..n+1, u3=n+2, u4=n+3.
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.m() + 2 * n + 2);
    for (auto [a, b] : g.edges()) edges.emplace_back(a + 2, b + 2);
    edges.emplace_back(0, 1);
    edges.emplace_back(n + 2, n + 3);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(1, i + 2);
        edges.emplace_back(i + 2, n + 2);
    }

    GchResult out;
    out.graph = Graph::build(std::move(labels), edges);
    double dn = n;
    double lambda = (dn + 2.0 - std::sqrt(dn * dn + 4.0)) / 2.0;
    out.expected_mu = lambda;
    out.expected_fiedler.assign(n + 4, 0.0);
    out.expected_fiedler[0] = 1.0;
    out.expected_fiedler[1] = 1.0 - lambda;
    out.expected_fiedler[n + 2] = lambda - 1.0;
    out.expected_fiedler[n + 3] = -1.0;
    return out;
}

}  // namespace centralparts

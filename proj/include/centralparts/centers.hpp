#pragma once

#include <vector>

#include "centralparts/graph.hpp"
#include "centralparts/metric.hpp"

namespace centralparts {

// Vertices of minimum eccentricity.
VertexSet center(const DistanceMatrix& dm);
VertexSet center(const Graph& g);

// Vertices of minimum total distance D(v).
VertexSet median(const DistanceMatrix& dm);
VertexSet median(const Graph& g);

// Edge count of the heaviest branch at v: every component of T - v plus its
// edge back to v. Tree input only.
int branch_weight(const Graph& t, int v);

// Vertices minimizing branch weight; one vertex or two adjacent ones.
VertexSet centroid_tree(const Graph& t);

// g[u][v] = |{x : d(x,u) < d(x,v)}| - |{x : d(x,v) < d(x,u)}|,
// s[u] = min over v != u of g[u][v].
struct SecurityTable {
    int n = 0;
    std::vector<int> g;  // row-major n*n, antisymmetric
    std::vector<int> s;

    int g_at(int u, int v) const { return g[static_cast<size_t>(u) * n + v]; }
};

SecurityTable security_table(const DistanceMatrix& dm);
SecurityTable security_table_serial(const DistanceMatrix& dm);
SecurityTable security_table(const Graph& g);

// Vertices maximizing s. A single-vertex graph is its own security center
// even though s itself is a min over an empty set there.
VertexSet security_center(const SecurityTable& table);
VertexSet security_center(const Graph& g);

}  // namespace centralparts

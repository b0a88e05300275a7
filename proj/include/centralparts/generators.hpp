#pragma once

#include <random>
#include <string>
#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

// Canonical labeled families. Path vertices are labeled "1".."n" in path
// order; the star center is "v" with leaves "1".."n-1"; hypercube labels are
// d-bit strings.
Graph make_path(int n);
Graph make_star(int n);  // n = total vertex count, so K_{1,n-1}
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int m, int n);
Graph make_petersen();
Graph make_hypercube(int d);
Graph make_circulant(int n, std::vector<int> connections);
Graph make_empty(int n);  // complement of K_n

// Dispatch by family name: path, star, cycle, complete, bipartite, petersen,
// hypercube, circulant, empty. Throws std::invalid_argument on unknown family
// or bad parameters.
Graph generate(const std::string& family, const std::vector<int>& params);

// The two hand-drawn fixtures: a 15-vertex graph whose six central parts are
// pairwise distinct, and a 17-vertex broom tree (path 1..10 with seven
// pendant leaves 11..17 at vertex 10) whose parts are pairwise disjoint.
Graph fixture_gstar();
Graph fixture_broom();

// Uniform random labeled tree via Pruefer sequences; labels "1".."n".
Graph random_tree(int n, std::mt19937_64& rng);

// Erdos-Renyi G(n, p); labels "1".."n". May be disconnected.
Graph random_gnp(int n, double p, std::mt19937_64& rng);

// G(n, p) conditioned on connectivity (rejection sampling).
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng);

// Stream-splitting helper: a deterministic per-sample seed derived from a
// base seed and a sample index, independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace centralparts

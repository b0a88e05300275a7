#pragma once

#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

// All-pairs shortest-path hop counts. Entries are exact integers; kUnreachable
// marks pairs in different components.
struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
    bool all_finite() const;
};

// Hop distances from one source; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, int source);

// One BFS per source. The parallel version runs sources across OpenMP threads
// and is bit-identical to the serial reference.
DistanceMatrix apsp(const Graph& g);
DistanceMatrix apsp_serial(const Graph& g);

// max / sum of row v. Throws NotConnectedError if the row has an unreachable
// entry: eccentricity and distance sums are defined for connected graphs only.
int eccentricity(const DistanceMatrix& dm, int v);
long long distance_sum(const DistanceMatrix& dm, int v);

// Blocks are maximal 2-connected subgraphs; a bridge counts as a K2 block.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

// DFS lowpoint decomposition. Requires a connected graph.
BlockDecomposition blocks(const Graph& g);

bool contained_in_some_block(const BlockDecomposition& bd, const VertexSet& s);

}  // namespace centralparts

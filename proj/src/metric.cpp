#include "centralparts/metric.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "centralparts/errors.hpp"

namespace centralparts {

bool DistanceMatrix::all_finite() const {
    return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n())
        throw std::out_of_range("bfs source out of range");
    std::vector<int> dist(g.n(), DistanceMatrix::kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == DistanceMatrix::kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

namespace {

DistanceMatrix apsp_impl(const Graph& g, bool parallel) {
    DistanceMatrix dm;
    dm.n = g.n();
    dm.d.assign(static_cast<size_t>(dm.n) * dm.n, DistanceMatrix::kUnreachable);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (int s = 0; s < dm.n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(),
                  dm.d.begin() + static_cast<size_t>(s) * dm.n);
    }
    return dm;
}

}  // namespace

DistanceMatrix apsp(const Graph& g) { return apsp_impl(g, true); }
DistanceMatrix apsp_serial(const Graph& g) { return apsp_impl(g, false); }

int eccentricity(const DistanceMatrix& dm, int v) {
    int e = 0;
    for (int u = 0; u < dm.n; ++u) {
        int d = dm.at(v, u);
        if (d == DistanceMatrix::kUnreachable)
            throw NotConnectedError("eccentricity undefined: graph not connected");
        e = std::max(e, d);
    }
    return e;
}

long long distance_sum(const DistanceMatrix& dm, int v) {
    long long total = 0;
    for (int u = 0; u < dm.n; ++u) {
        int d = dm.at(v, u);
        if (d == DistanceMatrix::kUnreachable)
            throw NotConnectedError("distance sum undefined: graph not connected");
        total += d;
    }
    return total;
}

namespace {

// Hopcroft-Tarjan with an edge stack; pops one block per articulation event.
struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), disc(graph.n(), -1), low(graph.n(), -1) {}

    void pop_block(const std::pair<int, int>& until) {
        VertexSet block;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == until) break;
        }
        out.blocks.push_back(std::move(block));
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (disc[v] == -1) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // u separates v's subtree: close off a block.
                    if (parent != -1 || children > 1) out.cut_vertices.insert(u);
                    pop_block({u, v});
                }
            } else if (v != parent && disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (!g.connected()) throw NotConnectedError("blocks: graph not connected");
    if (g.n() == 1) {
        BlockDecomposition bd;
        bd.blocks.push_back({0});
        return bd;
    }
    BlockFinder finder(g);
    finder.dfs(0, -1);
    return std::move(finder.out);
}

bool contained_in_some_block(const BlockDecomposition& bd, const VertexSet& s) {
    if (s.empty()) return true;
    for (const auto& b : bd.blocks)
        if (std::includes(b.begin(), b.end(), s.begin(), s.end())) return true;
    return false;
}

}  // namespace centralparts

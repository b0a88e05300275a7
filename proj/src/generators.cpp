#include "centralparts/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace centralparts {

namespace {

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph make_path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(numeric_labels(n), edges);
}

Graph make_star(int n) {
    require(n >= 2, "star needs n >= 2");
    std::vector<std::string> labels = {"v"};
    for (int i = 1; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::build(std::move(labels), edges);
}

Graph make_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(numeric_labels(n), edges);
}

Graph make_complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build(numeric_labels(n), edges);
}

Graph make_complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "bipartite needs m, n >= 1");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back("b" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
    return Graph::build(std::move(labels), edges);
}

Graph make_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return Graph::build(numeric_labels(10), edges);
}

Graph make_hypercube(int d) {
    require(d >= 1 && d <= 16, "hypercube needs 1 <= d <= 16");
    int n = 1 << d;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::string lab(d, '0');
        for (int b = 0; b < d; ++b)
            if (i & (1 << b)) lab[d - 1 - b] = '1';
        labels.push_back(lab);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b) {
            int j = i ^ (1 << b);
            if (i < j) edges.emplace_back(i, j);
        }
    return Graph::build(std::move(labels), edges);
}

Graph make_circulant(int n, std::vector<int> connections) {
    require(n >= 2, "circulant needs n >= 2");
    std::sort(connections.begin(), connections.end());
    std::set<std::pair<int, int>> edge_set;
    for (size_t i = 0; i < connections.size(); ++i) {
        int s = connections[i];
        require(s >= 1 && s <= n / 2, "circulant connection must lie in 1..n/2");
        require(i == 0 || connections[i - 1] != s, "repeated circulant connection");
        for (int v = 0; v < n; ++v) {
            int w = (v + s) % n;
            edge_set.insert(std::minmax(v, w));
        }
    }
    std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    return Graph::build(numeric_labels(n), edges);
}

Graph make_empty(int n) {
    require(n >= 1, "empty graph needs n >= 1");
    return Graph::build(numeric_labels(n), {});
}

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto arity = [&](size_t k) {
        require(params.size() == k, family + " takes " + std::to_string(k) +
                                        " parameter(s), got " +
                                        std::to_string(params.size()));
    };
    if (family == "path") { arity(1); return make_path(params[0]); }
    if (family == "star") { arity(1); return make_star(params[0]); }
    if (family == "cycle") { arity(1); return make_cycle(params[0]); }
    if (family == "complete") { arity(1); return make_complete(params[0]); }
    if (family == "bipartite") { arity(2); return make_complete_bipartite(params[0], params[1]); }
    if (family == "petersen") { arity(0); return make_petersen(); }
    if (family == "hypercube") { arity(1); return make_hypercube(params[0]); }
    if (family == "empty") { arity(1); return make_empty(params[0]); }
    if (family == "circulant") {
        require(params.size() >= 1, "circulant takes n followed by connections");
        return make_circulant(params[0], {params.begin() + 1, params.end()});
    }
    throw std::invalid_argument("unknown family: '" + family + "'");
}

Graph fixture_gstar() {
    // 11-vertex ring with chords 1-4 and 1-13, plus three leaves at vertex 7.
    static const std::pair<int, int> kEdges[] = {
        {1, 2},   {2, 3},   {3, 4},   {4, 5},   {5, 6},  {6, 7},
        {7, 8},   {7, 9},   {7, 10},  {7, 11},  {11, 12}, {12, 13},
        {13, 14}, {14, 15}, {15, 1},  {1, 4},   {1, 13}};
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : kEdges) edges.emplace_back(u - 1, v - 1);
    return Graph::build(numeric_labels(15), edges);
}

Graph fixture_broom() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= 9; ++i) edges.emplace_back(i - 1, i);
    for (int j = 11; j <= 17; ++j) edges.emplace_back(9, j - 1);
    return Graph::build(numeric_labels(17), edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    require(n >= 1, "random tree needs n >= 1");
    if (n == 1) return make_empty(1);
    if (n == 2) return make_path(2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);

    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);

    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::build(numeric_labels(n), edges);
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    require(n >= 1, "G(n,p) needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "G(n,p) needs p in [0,1]");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.emplace_back(i, j);
    return Graph::build(numeric_labels(n), edges);
}

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Graph g = random_gnp(n, p, rng);
        if (g.connected()) return g;
    }
    throw std::runtime_error("failed to sample a connected G(n,p); p too small?");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 of the pair; any fixed mixing works, this one is standard.
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace centralparts

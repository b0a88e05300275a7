#include "centralparts/subgraph_count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "centralparts/errors.hpp"

namespace centralparts {

std::string to_string(CountMode mode) {
    return mode == CountMode::Induced ? "induced" : "edge";
}

namespace {

// Generates every connected vertex set exactly once as a bitmask: a set is
// grown from `root` by repeatedly adding a frontier vertex, and a vertex
// passed over at some step stays banned for the rest of that subtree.
struct Enumerator {
    int n;
    std::vector<uint32_t> adj;

    explicit Enumerator(const Graph& g) : n(g.n()), adj(g.n(), 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[v] |= uint32_t(1) << u;
    }

    template <typename Visit>
    void enumerate_from(int root, uint32_t banned, Visit&& visit) const {
        rec(uint32_t(1) << root, adj[root], banned, visit);
    }

    template <typename Visit>
    void rec(uint32_t s, uint32_t nbr, uint32_t banned, Visit& visit) const {
        visit(s);
        uint32_t frontier = nbr & ~s & ~banned;
        while (frontier) {
            int v = std::countr_zero(frontier);
            uint32_t bit = uint32_t(1) << v;
            frontier &= frontier - 1;
            rec(s | bit, nbr | adj[v], banned, visit);
            banned |= bit;
        }
    }
};

void check_cap(const Graph& g, CountMode mode, const CountCaps& caps) {
    int limit = std::min(caps.for_mode(mode), 32);
    if (g.n() > limit)
        throw CapExceededError(to_string(mode) + "-mode counting capped at " +
                               std::to_string(limit) + " vertices (graph has " +
                               std::to_string(g.n()) + ")");
}

uint32_t mask_of(const VertexSet& s, int n, const char* what) {
    uint32_t m = 0;
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument(std::string(what) +
                                        " vertex out of range");
        m |= uint32_t(1) << v;
    }
    return m;
}

// Multigraph under deletion/contraction: at most one bundle per vertex pair,
// carrying the parallel-edge multiplicity.
struct MultiGraph {
    int nv = 0;
    std::vector<std::array<int, 3>> bundles;  // {u, v, mult}, u < v
};

bool mg_connected(const MultiGraph& mg) {
    if (mg.nv == 0) return false;
    std::vector<std::vector<int>> adj(mg.nv);
    for (const auto& b : mg.bundles) {
        adj[b[0]].push_back(b[1]);
        adj[b[1]].push_back(b[0]);
    }
    std::vector<char> seen(mg.nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == mg.nv;
}

MultiGraph contract_bundle(const MultiGraph& mg, int i) {
    const int u = mg.bundles[i][0], v = mg.bundles[i][1];
    MultiGraph out;
    out.nv = mg.nv - 1;
    auto remap = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    std::map<std::pair<int, int>, int> merged;
    for (int j = 0; j < static_cast<int>(mg.bundles.size()); ++j) {
        if (j == i) continue;
        int a = remap(mg.bundles[j][0]), b = remap(mg.bundles[j][1]);
        if (a > b) std::swap(a, b);
        merged[{a, b}] += mg.bundles[j][2];
    }
    for (const auto& [e, k] : merged) out.bundles.push_back({e.first, e.second, k});
    return out;
}

// Connected spanning edge-subset count. A bundle of k parallel edges is
// either fully absent (delete) or present in 2^k - 1 ways (contract); once
// the skeleton is a tree every bundle is a cut, so each needs one of its
// 2^k - 1 nonempty choices independently.
BigCount delcon(const MultiGraph& mg) {
    if (!mg_connected(mg)) return 0;
    if (static_cast<int>(mg.bundles.size()) == mg.nv - 1) {
        BigCount prod = 1;
        for (const auto& b : mg.bundles) prod *= (BigCount(1) << b[2]) - 1;
        return prod;
    }
    // Skeleton has a cycle, so some bundle's removal keeps it connected.
    int pick = -1;
    for (int i = 0; pick < 0; ++i) {
        MultiGraph del = mg;
        del.bundles.erase(del.bundles.begin() + i);
        if (mg_connected(del)) pick = i;
    }
    MultiGraph del = mg;
    del.bundles.erase(del.bundles.begin() + pick);
    BigCount total = delcon(del);
    total += ((BigCount(1) << mg.bundles[pick][2]) - 1) *
             delcon(contract_bundle(mg, pick));
    return total;
}

// Spanning-connected counts per vertex set. Low cycle rank: per-set
// deletion/contraction (cheap on near-trees, and a connected subset's rank
// never exceeds the graph's). Dense: one inclusion-exclusion table over all
// subsets, c[S] = 2^edges(S) minus the splits off S's lowest vertex.
class EdgeCounter {
public:
    explicit EdgeCounter(const Graph& g) : n_(g.n()), adj_(g.n(), 0) {
        for (int v = 0; v < n_; ++v)
            for (int u : g.neighbors(v)) adj_[v] |= uint32_t(1) << u;
        if (g.m() - n_ + 1 > kRankThreshold) build_table();
    }

    BigCount count(uint32_t s) const {
        if (!table_.empty()) return table_[s];
        return delcon(multigraph_of(s));
    }

private:
    static constexpr int kRankThreshold = 8;
    static constexpr int kTableLimit = 20;

    int n_;
    std::vector<uint32_t> adj_;
    std::vector<BigCount> table_;

    MultiGraph multigraph_of(uint32_t s) const {
        MultiGraph mg;
        mg.nv = std::popcount(s);
        std::vector<int> id(n_, -1);
        int next = 0;
        for (int v = 0; v < n_; ++v)
            if (s >> v & 1) id[v] = next++;
        for (int v = 0; v < n_; ++v) {
            if (!(s >> v & 1)) continue;
            uint32_t up = adj_[v] & s & ~((uint32_t(1) << v) | ((uint32_t(1) << v) - 1));
            while (up) {
                int u = std::countr_zero(up);
                up &= up - 1;
                mg.bundles.push_back({id[v], id[u], 1});
            }
        }
        return mg;
    }

    void build_table() {
        if (n_ > kTableLimit)
            throw CapExceededError(
                "dense edge-mode counting needs the full subset table, "
                "limited to " + std::to_string(kTableLimit) + " vertices");
        const size_t full = size_t(1) << n_;
        std::vector<int> e(full, 0);
        for (uint32_t s = 1; s < full; ++s) {
            int v = std::countr_zero(s);
            e[s] = e[s & (s - 1)] + std::popcount(adj_[v] & s);
        }
        table_.assign(full, BigCount(0));
        for (uint32_t s = 1; s < full; ++s) {
            uint32_t low = s & ~(s - 1);
            uint32_t rest = s ^ low;
            if (!rest) {
                table_[s] = 1;  // a single vertex with no edges is connected
                continue;
            }
            BigCount total = BigCount(1) << e[s];
            // Subtract every way the lowest vertex's component T falls short
            // of S; the rest of S takes arbitrary internal edges.
            for (uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
                uint32_t t = sub | low;
                total -= table_[t] << e[s & ~t];
                if (!sub) break;
            }
            table_[s] = std::move(total);
        }
    }
};

}  // namespace

BigCount count_connected(const Graph& g, const VertexSet& required,
                         const VertexSet& forbidden, CountMode mode,
                         const CountCaps& caps) {
    if (required.empty())
        throw std::invalid_argument("required set must be nonempty");
    check_cap(g, mode, caps);
    uint32_t req = mask_of(required, g.n(), "required");
    uint32_t forb = mask_of(forbidden, g.n(), "forbidden");
    if (req & forb)
        throw std::invalid_argument("required and forbidden sets overlap");

    Enumerator en(g);
    int r0 = *required.begin();
    if (mode == CountMode::Induced) {
        unsigned long long total = 0;
        en.enumerate_from(r0, forb, [&](uint32_t s) {
            if ((s & req) == req) ++total;
        });
        return BigCount(total);
    }
    EdgeCounter ec(g);
    BigCount total = 0;
    en.enumerate_from(r0, forb, [&](uint32_t s) {
        if ((s & req) == req) total += ec.count(s);
    });
    return total;
}

BigCount subgraph_number(const Graph& g, int v, CountMode mode,
                         const CountCaps& caps) {
    return count_connected(g, {v}, {}, mode, caps);
}

BigCount eccentric_subgraph_number(const Graph& g, int v, CountMode mode,
                                   const CountCaps& caps) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("vertex out of range");
    BigCount best = subgraph_number(g, v, mode, caps);
    for (int u = 0; u < g.n(); ++u) {
        if (u == v) continue;
        BigCount c = count_connected(g, {v, u}, {}, mode, caps);
        if (c < best) best = std::move(c);
    }
    return best;
}

namespace {

template <typename Acc, typename Weight>
void credit_pairs(std::vector<Acc>& tab, uint32_t s, int n, const Weight& w) {
    std::array<int, 32> members{};
    int k = 0;
    uint32_t rest = s;
    while (rest) {
        members[k++] = std::countr_zero(rest);
        rest &= rest - 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            tab[static_cast<size_t>(members[i]) * n + members[j]] += w;
}

PairCountTable pair_table_impl(const Graph& g, CountMode mode,
                               const CountCaps& caps, bool parallel) {
    check_cap(g, mode, caps);
    const int n = g.n();
    PairCountTable out;
    out.n = n;
    out.mode = mode;
    out.pair.assign(static_cast<size_t>(n) * n, BigCount(0));
    if (n == 0) return out;
    Enumerator en(g);

    if (mode == CountMode::Induced) {
        std::vector<std::vector<unsigned long long>> partial(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int r = 0; r < n; ++r) {
            std::vector<unsigned long long> tab(static_cast<size_t>(n) * n, 0);
            en.enumerate_from(r, (uint32_t(1) << r) - 1, [&](uint32_t s) {
                credit_pairs(tab, s, n, 1ull);
            });
            partial[r] = std::move(tab);
        }
        // Exact integer sums in fixed root order: bit-identical to serial.
        for (int r = 0; r < n; ++r)
            for (size_t i = 0; i < partial[r].size(); ++i)
                if (partial[r][i]) out.pair[i] += partial[r][i];
    } else {
        EdgeCounter ec(g);
        std::vector<std::vector<BigCount>> partial(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int r = 0; r < n; ++r) {
            std::vector<BigCount> tab(static_cast<size_t>(n) * n, BigCount(0));
            en.enumerate_from(r, (uint32_t(1) << r) - 1, [&](uint32_t s) {
                credit_pairs(tab, s, n, ec.count(s));
            });
            partial[r] = std::move(tab);
        }
        for (int r = 0; r < n; ++r)
            for (size_t i = 0; i < partial[r].size(); ++i)
                if (partial[r][i] != 0) out.pair[i] += partial[r][i];
    }

    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u)
            out.pair[static_cast<size_t>(v) * n + u] =
                out.pair[static_cast<size_t>(u) * n + v];
    return out;
}

}  // namespace

PairCountTable pair_count_table(const Graph& g, CountMode mode,
                                const CountCaps& caps) {
    return pair_table_impl(g, mode, caps, true);
}

PairCountTable pair_count_table_serial(const Graph& g, CountMode mode,
                                       const CountCaps& caps) {
    return pair_table_impl(g, mode, caps, false);
}

VertexSet subgraph_core(const Graph& g, CountMode mode, const CountCaps& caps) {
    if (!g.connected())
        throw NotConnectedError("subgraph core undefined: graph not connected");
    check_cap(g, mode, caps);
    const int n = g.n();
    Enumerator en(g);
    std::vector<BigCount> f(n, BigCount(0));
    if (mode == CountMode::Induced) {
        std::vector<std::vector<unsigned long long>> partial(n);
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < n; ++r) {
            std::vector<unsigned long long> tab(n, 0);
            en.enumerate_from(r, (uint32_t(1) << r) - 1, [&](uint32_t s) {
                uint32_t rest = s;
                while (rest) {
                    ++tab[std::countr_zero(rest)];
                    rest &= rest - 1;
                }
            });
            partial[r] = std::move(tab);
        }
        for (int r = 0; r < n; ++r)
            for (int v = 0; v < n; ++v) f[v] += partial[r][v];
    } else {
        EdgeCounter ec(g);
        std::vector<std::vector<BigCount>> partial(n);
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < n; ++r) {
            std::vector<BigCount> tab(n, BigCount(0));
            en.enumerate_from(r, (uint32_t(1) << r) - 1, [&](uint32_t s) {
                BigCount w = ec.count(s);
                uint32_t rest = s;
                while (rest) {
                    tab[std::countr_zero(rest)] += w;
                    rest &= rest - 1;
                }
            });
            partial[r] = std::move(tab);
        }
        for (int r = 0; r < n; ++r)
            for (int v = 0; v < n; ++v) f[v] += partial[r][v];
    }

    VertexSet core{0};
    for (int v = 1; v < n; ++v) {
        if (f[v] > f[*core.begin()]) {
            core.clear();
            core.insert(v);
        } else if (f[v] == f[*core.begin()]) {
            core.insert(v);
        }
    }
    return core;
}

VertexSet core_vertices(const Graph& g, CountMode mode, const CountCaps& caps) {
    if (!g.connected())
        throw NotConnectedError("core vertices undefined: graph not connected");
    PairCountTable t = pair_count_table(g, mode, caps);
    std::vector<BigCount> eps(t.n);
    for (int v = 0; v < t.n; ++v) {
        BigCount best = t.at(v, v);
        for (int u = 0; u < t.n; ++u)
            if (t.at(v, u) < best) best = t.at(v, u);
        eps[v] = std::move(best);
    }
    VertexSet core{0};
    for (int v = 1; v < t.n; ++v) {
        if (eps[v] > eps[*core.begin()]) {
            core.clear();
            core.insert(v);
        } else if (eps[v] == eps[*core.begin()]) {
            core.insert(v);
        }
    }
    return core;
}

namespace {

void require_tree_for_count(const Graph& t) {
    if (!is_tree(t)) throw NotATreeError("tree counting requires a tree");
}

BigCount subtree_count_below(const Graph& t, int v, int parent) {
    BigCount prod = 1;
    for (int c : t.neighbors(v))
        if (c != parent) prod *= 1 + subtree_count_below(t, c, v);
    return prod;
}

}  // namespace

BigCount tree_subtree_count(const Graph& t, int v) {
    require_tree_for_count(t);
    if (v < 0 || v >= t.n()) throw std::out_of_range("vertex out of range");
    return subtree_count_below(t, v, -1);
}

BigCount tree_pair_count(const Graph& t, int u, int v) {
    require_tree_for_count(t);
    if (u < 0 || u >= t.n() || v < 0 || v >= t.n())
        throw std::out_of_range("vertex out of range");
    if (u == v) return tree_subtree_count(t, u);

    std::vector<int> parent(t.n(), -2);
    parent[v] = -1;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(x))
            if (parent[w] == -2) {
                parent[w] = x;
                stack.push_back(w);
            }
    }

    std::vector<char> on_path(t.n(), 0);
    std::vector<int> path;
    for (int x = u; x != -1; x = parent[x]) {
        path.push_back(x);
        on_path[x] = 1;
    }

    // Every subtree through the whole u-v path picks, independently at each
    // path vertex, one subtree of the branches hanging off it.
    BigCount prod = 1;
    for (int w : path)
        for (int c : t.neighbors(w))
            if (!on_path[c]) prod *= 1 + subtree_count_below(t, c, w);
    return prod;
}

}  // namespace centralparts

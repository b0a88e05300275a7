#include "centralparts/centers.hpp"

#include <algorithm>
#include <limits>

#include "centralparts/errors.hpp"

namespace centralparts {

namespace {

template <typename Score>
VertexSet argmin_set(int n, Score&& score) {
    VertexSet out;
    auto best = score(0);
    out.insert(0);
    for (int v = 1; v < n; ++v) {
        auto sv = score(v);
        if (sv < best) {
            best = sv;
            out.clear();
            out.insert(v);
        } else if (sv == best) {
            out.insert(v);
        }
    }
    return out;
}

}  // namespace

VertexSet center(const DistanceMatrix& dm) {
    return argmin_set(dm.n, [&](int v) { return eccentricity(dm, v); });
}

VertexSet center(const Graph& g) { return center(apsp(g)); }

VertexSet median(const DistanceMatrix& dm) {
    return argmin_set(dm.n, [&](int v) { return distance_sum(dm, v); });
}

VertexSet median(const Graph& g) { return median(apsp(g)); }

namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw NotATreeError("expected a tree (connected, m = n-1)");
}

// Size of the component of t - root containing seed, counted in vertices.
int component_size_avoiding(const Graph& t, int root, int seed) {
    std::vector<char> seen(t.n(), 0);
    seen[root] = 1;
    std::vector<int> stack{seed};
    seen[seed] = 1;
    int count = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++count;
        for (int w : t.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count;
}

}  // namespace

int branch_weight(const Graph& t, int v) {
    require_tree(t);
    int weight = 0;
    // A branch's edge count equals its component's vertex count: the
    // component contributes size-1 edges plus the edge back to v.
    for (int u : t.neighbors(v))
        weight = std::max(weight, component_size_avoiding(t, v, u));
    return weight;
}

VertexSet centroid_tree(const Graph& t) {
    require_tree(t);
    return argmin_set(t.n(), [&](int v) { return branch_weight(t, v); });
}

namespace {

SecurityTable security_table_impl(const DistanceMatrix& dm, bool parallel) {
    if (!dm.all_finite())
        throw NotConnectedError("security table undefined: graph not connected");
    SecurityTable table;
    table.n = dm.n;
    table.g.assign(static_cast<size_t>(dm.n) * dm.n, 0);
    // Fill u < v and mirror so antisymmetry holds by construction.
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (int u = 0; u < dm.n; ++u)
        for (int v = u + 1; v < dm.n; ++v) {
            int closer_u = 0, closer_v = 0;
            for (int x = 0; x < dm.n; ++x) {
                int du = dm.at(x, u), dv = dm.at(x, v);
                if (du < dv)
                    ++closer_u;
                else if (dv < du)
                    ++closer_v;
            }
            table.g[static_cast<size_t>(u) * dm.n + v] = closer_u - closer_v;
            table.g[static_cast<size_t>(v) * dm.n + u] = closer_v - closer_u;
        }
    table.s.assign(dm.n, 0);
    for (int u = 0; u < dm.n; ++u) {
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < dm.n; ++v)
            if (v != u) best = std::min(best, table.g_at(u, v));
        table.s[u] = dm.n > 1 ? best : 0;
    }
    return table;
}

}  // namespace

SecurityTable security_table(const DistanceMatrix& dm) {
    return security_table_impl(dm, true);
}

SecurityTable security_table_serial(const DistanceMatrix& dm) {
    return security_table_impl(dm, false);
}

SecurityTable security_table(const Graph& g) {
    return security_table(apsp(g));
}

VertexSet security_center(const SecurityTable& table) {
    return argmin_set(table.n, [&](int v) { return -table.s[v]; });
}

VertexSet security_center(const Graph& g) {
    if (g.n() == 1) return {0};
    if (!g.connected())
        throw NotConnectedError("security center undefined: graph not connected");
    return security_center(security_table(g));
}

}  // namespace centralparts

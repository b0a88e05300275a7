#include "centralparts/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "centralparts/errors.hpp"
#include "centralparts/metric.hpp"

namespace centralparts {

SymMatrix SymMatrix::zero(int n) {
    SymMatrix m;
    m.n = n;
    m.a.assign(static_cast<size_t>(n) * n, 0.0);
    return m;
}

double SymMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += std::fabs(at(i, j));
        best = std::max(best, row);
    }
    return best;
}

SymMatrix laplacian(const Graph& g) {
    SymMatrix l = SymMatrix::zero(g.n());
    for (int v = 0; v < g.n(); ++v) {
        l.at(v, v) = g.degree(v);
        for (int u : g.neighbors(v)) l.at(v, u) = -1.0;
    }
    return l;
}

namespace {

double inner(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double offdiag_norm(const SymMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (i != j) s += m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

double fro_norm(const SymMatrix& m) {
    return std::sqrt(inner(m.a, m.a));
}

}  // namespace

EigenDecomposition eig_sym(const SymMatrix& input) {
    const int n = input.n;
    if (n == 0) throw std::invalid_argument("eig_sym: empty matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (input.at(i, j) != input.at(j, i))
                throw std::invalid_argument("eig_sym: matrix not symmetric");

    SymMatrix a = input;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    const double stop = 1e-12 * std::max(1.0, fro_norm(input));
    const int kMaxSweeps = 500;
    bool converged = offdiag_norm(a) <= stop;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                double tau = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = tau >= 0.0
                               ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                               : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[static_cast<size_t>(k) * n + p];
                    double vkq = v[static_cast<size_t>(k) * n + q];
                    v[static_cast<size_t>(k) * n + p] = c * vkp - s * vkq;
                    v[static_cast<size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
        converged = offdiag_norm(a) <= stop;
    }
    if (!converged)
        throw NumericError("eig_sym: rotation sweeps failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        int i = order[k];
        out.values.push_back(a.at(i, i));
        for (int r = 0; r < n; ++r)
            out.vectors[k][r] = v[static_cast<size_t>(r) * n + i];
    }
    out.residual_bound = 1e-9 * std::max(1.0, input.inf_norm());
    return out;
}

std::vector<double> FiedlerSpace::column(int k) const {
    std::vector<double> y(n);
    for (int v = 0; v < n; ++v) y[v] = basis_at(v, k);
    return y;
}

double FiedlerSpace::row_dot(int u, int v) const {
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += basis_at(u, k) * basis_at(v, k);
    return s;
}

double FiedlerSpace::row_norm(int v) const { return std::sqrt(row_dot(v, v)); }

FiedlerSpace fiedler_space(const Graph& g, double group_tol) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("fiedler space requires n >= 2");
    EigenDecomposition eig = eig_sym(laplacian(g));
    double tol = group_tol * std::max(1.0, eig.values.back());
    if (eig.values[1] <= tol)
        throw NotConnectedError("fiedler space undefined: graph not connected");

    FiedlerSpace fs;
    fs.mu = eig.values[1];
    fs.n = n;
    fs.group_tol = group_tol;
    fs.residual_bound = eig.residual_bound;

    std::vector<std::vector<double>> cols;
    for (int i = 1; i < n; ++i)
        if (std::fabs(eig.values[i] - fs.mu) <= tol)
            cols.push_back(eig.vectors[i]);
    // Pin each column exactly orthogonal to the constant vector, then fix up
    // orthonormality within the cluster.
    for (auto& y : cols) {
        double mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
        for (double& x : y) x -= mean;
    }
    for (size_t k = 0; k < cols.size(); ++k) {
        for (size_t j = 0; j < k; ++j) {
            double dot = inner(cols[k], cols[j]);
            for (int r = 0; r < n; ++r) cols[k][r] -= dot * cols[j][r];
        }
        double norm = std::sqrt(inner(cols[k], cols[k]));
        if (norm < 0.5)
            throw NumericError("fiedler basis degenerated under projection");
        for (double& x : cols[k]) x /= norm;
    }

    fs.d = static_cast<int>(cols.size());
    fs.basis.assign(static_cast<size_t>(n) * fs.d, 0.0);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < fs.d; ++k)
            fs.basis[static_cast<size_t>(v) * fs.d + k] = cols[k][v];
    return fs;
}

VertexSet characteristic_set_of_vector(const Graph& g,
                                       const std::vector<double>& y,
                                       double zero_tol) {
    if (static_cast<int>(y.size()) != g.n())
        throw std::invalid_argument("valuation length mismatch");
    double ymax = 0.0;
    for (double x : y) ymax = std::max(ymax, std::fabs(x));
    if (ymax == 0.0) throw std::invalid_argument("zero valuation");
    double thr = zero_tol * ymax;

    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        bool v_zero = std::fabs(y[v]) <= thr;
        for (int u : g.neighbors(v)) {
            bool u_zero = std::fabs(y[u]) <= thr;
            if (v_zero ? !u_zero : (!u_zero && y[v] * y[u] < 0.0)) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

namespace {

constexpr double kParallelTol = 1e-9;

}  // namespace

VertexSet characteristic_center(const Graph& g, const FiedlerSpace& fs) {
    if (fs.n != g.n())
        throw std::invalid_argument("fiedler space does not match graph");
    std::vector<double> norm(g.n());
    double norm_max = 0.0;
    for (int v = 0; v < g.n(); ++v) {
        norm[v] = fs.row_norm(v);
        norm_max = std::max(norm_max, norm[v]);
    }
    double tau = kCharacteristicZeroTol * norm_max;

    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v)) {
            bool qualifies = false;
            if (norm[v] <= tau) {
                // Some Fiedler vector vanishes everywhere v does; it keeps u
                // nonzero exactly when u's row survives.
                qualifies = norm[u] > tau;
            } else if (norm[u] > tau) {
                double dot = fs.row_dot(v, u);
                if (std::fabs(dot) < (1.0 - kParallelTol) * norm[v] * norm[u])
                    qualifies = true;  // independent rows: both cases reachable
                else if (dot < 0.0)
                    qualifies = true;  // opposite fixed signs in every vector
            }
            if (qualifies) {
                out.insert(v);
                break;
            }
        }
    }
    return out;
}

VertexSet characteristic_center(const Graph& g) {
    return characteristic_center(g, fiedler_space(g));
}

FiedlerClassification classify_fiedler_vector(const Graph& g,
                                              const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != g.n())
        throw std::invalid_argument("valuation length mismatch");
    double ymax = 0.0;
    for (double x : y) ymax = std::max(ymax, std::fabs(x));
    if (ymax == 0.0) throw std::invalid_argument("zero valuation");
    double thr = kCharacteristicZeroTol * ymax;

    std::vector<int> sign(g.n());
    for (int v = 0; v < g.n(); ++v)
        sign[v] = y[v] > thr ? 1 : (y[v] < -thr ? -1 : 0);

    BlockDecomposition bd = blocks(g);
    std::vector<size_t> mixed;
    for (size_t b = 0; b < bd.blocks.size(); ++b) {
        bool pos = false, neg = false;
        for (int v : bd.blocks[b]) {
            pos = pos || sign[v] > 0;
            neg = neg || sign[v] < 0;
        }
        if (pos && neg) mixed.push_back(b);
    }

    FiedlerClassification out;
    if (mixed.size() == 1) {
        out.kind = FiedlerClassification::CaseA;
        out.block = bd.blocks[mixed[0]];
        return out;
    }
    if (mixed.size() > 1)
        throw NumericError("classify: several sign-mixed blocks");

    std::vector<int> boundary_zeros;
    for (int v = 0; v < g.n(); ++v) {
        if (sign[v] != 0) continue;
        for (int u : g.neighbors(v))
            if (sign[u] != 0) {
                boundary_zeros.push_back(v);
                break;
            }
    }
    if (boundary_zeros.size() != 1)
        throw NumericError("classify: no unique zero vertex on the boundary");
    out.kind = FiedlerClassification::CaseB;
    out.zero_vertex = boundary_zeros.front();
    return out;
}

namespace {

VertexSet component_avoiding(const Graph& g, int seed, int avoid) {
    VertexSet comp;
    std::vector<int> stack{seed};
    comp.insert(seed);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u))
            if (w != avoid && !comp.count(w)) {
                comp.insert(w);
                stack.push_back(w);
            }
    }
    return comp;
}

}  // namespace

SymMatrix bottleneck_matrix(const Graph& t, int v, const VertexSet& component) {
    if (!is_tree(t)) throw NotATreeError("bottleneck matrix requires a tree");
    if (v < 0 || v >= t.n()) throw std::out_of_range("vertex out of range");
    if (component.empty() || component.count(v))
        throw std::invalid_argument("component must be nonempty and avoid v");
    if (component_avoiding(t, *component.begin(), v) != component)
        throw std::invalid_argument("set is not a component of t - v");

    // Parent pointers toward v; the edge x--parent(x) is named by x.
    std::vector<int> parent(t.n(), -1);
    std::vector<int> stack{v};
    std::vector<char> seen(t.n(), 0);
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : t.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                stack.push_back(w);
            }
    }

    std::vector<int> verts(component.begin(), component.end());
    const int k = static_cast<int>(verts.size());
    std::vector<std::vector<char>> on_path(k, std::vector<char>(t.n(), 0));
    for (int i = 0; i < k; ++i)
        for (int x = verts[i]; x != v; x = parent[x]) on_path[i][x] = 1;

    SymMatrix m = SymMatrix::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            int shared = 0;
            for (int x : verts)
                if (on_path[i][x] && on_path[j][x]) ++shared;
            m.at(i, j) = m.at(j, i) = shared;
        }
    return m;
}

double perron_value(const SymMatrix& m) {
    if (m.n == 0) throw std::invalid_argument("perron value of empty matrix");
    for (double x : m.a)
        if (x <= 0.0)
            throw std::invalid_argument("perron iteration needs a positive matrix");

    const int n = m.n;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double lambda = 0.0;
    const int kMaxIter = 200000;
    for (int it = 0; it < kMaxIter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
        }
        double rayleigh = inner(x, y);
        double norm = std::sqrt(inner(y, y));
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (it > 0 &&
            std::fabs(rayleigh - lambda) <= 1e-10 * std::max(1.0, rayleigh))
            return rayleigh;
        lambda = rayleigh;
    }
    throw NumericError("perron value iteration failed to converge");
}

VertexSet characteristic_set_tree_perron(const Graph& t) {
    if (!is_tree(t)) throw NotATreeError("perron characteristic set requires a tree");
    const int n = t.n();
    if (n == 1) return {0};

    const double kTieTol = 1e-8;
    std::vector<int> perron_nbr(n, -1);
    int tie_vertex = -1;
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<double, int>> rho;
        for (int u : t.neighbors(v)) {
            VertexSet comp = component_avoiding(t, u, v);
            rho.emplace_back(perron_value(bottleneck_matrix(t, v, comp)), u);
        }
        std::stable_sort(rho.begin(), rho.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        if (rho.size() >= 2 && rho[0].first - rho[1].first <= kTieTol * rho[0].first) {
            // Two or more branches share the top Perron value: v is the
            // characteristic vertex, and it must be unique.
            if (tie_vertex != -1)
                throw NumericError("perron tie detected at several vertices");
            tie_vertex = v;
        } else {
            perron_nbr[v] = rho[0].second;
        }
    }
    if (tie_vertex != -1) return {tie_vertex};

    VertexSet out;
    for (auto [u, w] : t.edges())
        if (perron_nbr[u] == w && perron_nbr[w] == u) {
            if (!out.empty())
                throw NumericError("several mutual Perron edges detected");
            out = {u, w};
        }
    if (out.empty())
        throw NumericError("no perron characteristic vertex or edge found");
    return out;
}

}  // namespace centralparts

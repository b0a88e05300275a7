#pragma once

#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

// Dense symmetric matrix, row-major doubles.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;

    static SymMatrix zero(int n);

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    // Max absolute row sum.
    double inf_norm() const;
};

// L = D - A: degrees on the diagonal, -1 per edge.
SymMatrix laplacian(const Graph& g);

struct EigenDecomposition {
    std::vector<double> values;                 // ascending
    std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
    double residual_bound = 0.0;                // 1e-9 * max(1, ||M||_inf)
};

// Cyclic-rotation diagonalization; throws NumericError if 500 sweeps do not
// converge. Eigenvectors come out orthonormal (products of rotations).
EigenDecomposition eig_sym(const SymMatrix& m);

// The eigenspace of the algebraic connectivity mu (second-smallest Laplacian
// eigenvalue). Eigenvalues within group_tol * max(1, lambda_max) of mu are
// clustered into one space of dimension d; the basis is orthonormal and
// orthogonal to the all-ones vector.
struct FiedlerSpace {
    double mu = 0.0;
    int n = 0;
    int d = 0;
    std::vector<double> basis;  // row-major n x d
    double group_tol = 0.0;
    double residual_bound = 0.0;

    double basis_at(int v, int k) const {
        return basis[static_cast<size_t>(v) * d + k];
    }
    std::vector<double> column(int k) const;
    double row_dot(int u, int v) const;
    double row_norm(int v) const;
};

inline constexpr double kFiedlerGroupTol = 1e-6;

// Throws NotConnectedError when the second eigenvalue is zero within the
// clustering tolerance (a disconnected graph); requires n >= 2.
FiedlerSpace fiedler_space(const Graph& g, double group_tol = kFiedlerGroupTol);

inline constexpr double kCharacteristicZeroTol = 1e-7;

// Characteristic vertices of one valuation y: v is in the set iff
//   (i)  |y(v)| <= zero_tol * ||y||_inf and some neighbor is above it, or
//   (ii) some neighbor u has y(v) * y(u) < 0 with both above the threshold.
VertexSet characteristic_set_of_vector(const Graph& g,
                                       const std::vector<double>& y,
                                       double zero_tol = kCharacteristicZeroTol);

// Union of characteristic sets over every Fiedler vector, decided exactly on
// the eigenspace: with r_v = row v of the basis, v qualifies via neighbor u
// when r_v vanishes but r_u does not, when r_v and r_u are linearly
// independent (some combination zeroes v while keeping u nonzero, another
// flips their signs), or when r_u is a negative multiple of r_v.
VertexSet characteristic_center(const Graph& g, const FiedlerSpace& fs);
VertexSet characteristic_center(const Graph& g);

// Every Fiedler vector falls in exactly one case: either a unique block
// carries both signs (Case A) or a unique zero vertex borders the nonzero
// part (Case B). Anything else signals a tolerance failure, not mathematics.
struct FiedlerClassification {
    enum Kind { CaseA, CaseB };
    Kind kind = CaseA;
    VertexSet block;      // Case A: the sign-mixed block
    int zero_vertex = -1; // Case B
};

FiedlerClassification classify_fiedler_vector(const Graph& g,
                                              const std::vector<double>& y);

// m[i][j] = number of edges shared by the i-to-v and j-to-v paths, for i, j
// in one connected component of t - v (rows in ascending vertex order).
// Entries are exact small integers.
SymMatrix bottleneck_matrix(const Graph& t, int v, const VertexSet& component);

// Dominant eigenvalue of a positive matrix by power iteration (all-ones
// start, relative tolerance 1e-10).
double perron_value(const SymMatrix& m);

// Tree characteristic set without any eigensolve: the single vertex where
// two or more branches tie for the largest bottleneck Perron value, or the
// edge whose endpoints hold each other's unique Perron branch.
VertexSet characteristic_set_tree_perron(const Graph& t);

}  // namespace centralparts

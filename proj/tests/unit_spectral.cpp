#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "centralparts/errors.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/spectral.hpp"

using namespace centralparts;

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_eigen_pairs(const SymMatrix& m, const EigenDecomposition& eig) {
    REQUIRE(eig.values.size() == static_cast<size_t>(m.n));
    // Ascending order.
    for (size_t k = 1; k < eig.values.size(); ++k)
        CHECK(eig.values[k - 1] <= eig.values[k]);
    // Residuals within the advertised bound.
    for (int k = 0; k < m.n; ++k) {
        const auto& v = eig.vectors[k];
        for (int i = 0; i < m.n; ++i) {
            double row = 0.0;
            for (int j = 0; j < m.n; ++j) row += m.at(i, j) * v[j];
            CHECK(std::fabs(row - eig.values[k] * v[i]) <= eig.residual_bound);
        }
    }
    // Orthonormal eigenvectors.
    for (int a = 0; a < m.n; ++a)
        for (int b = a; b < m.n; ++b) {
            double dot = 0.0;
            for (int i = 0; i < m.n; ++i)
                dot += eig.vectors[a][i] * eig.vectors[b][i];
            CHECK(std::fabs(dot - (a == b ? 1.0 : 0.0)) <= 1e-10);
        }
}

}  // namespace

TEST_CASE("laplacian entries") {
    Graph p = make_path(3);
    SymMatrix l = laplacian(p);
    CHECK(l.at(0, 0) == 1.0);
    CHECK(l.at(1, 1) == 2.0);
    CHECK(l.at(0, 1) == -1.0);
    CHECK(l.at(0, 2) == 0.0);
    CHECK(l.inf_norm() == 4.0);
}

TEST_CASE("eigenvalues of known graphs") {
    EigenDecomposition k2 = eig_sym(laplacian(make_path(2)));
    CHECK(std::fabs(k2.values[0]) <= 1e-9);
    CHECK(std::fabs(k2.values[1] - 2.0) <= 1e-9);

    EigenDecomposition c4 = eig_sym(laplacian(make_cycle(4)));
    std::vector<double> want = {0.0, 2.0, 2.0, 4.0};
    for (int k = 0; k < 4; ++k)
        CHECK(std::fabs(c4.values[k] - want[k]) <= 1e-9);

    // Complete graph: 0 then n with multiplicity n-1.
    EigenDecomposition k5 = eig_sym(laplacian(make_complete(5)));
    CHECK(std::fabs(k5.values[0]) <= 1e-9);
    for (int k = 1; k < 5; ++k) CHECK(std::fabs(k5.values[k] - 5.0) <= 1e-9);
}

TEST_CASE("eigen residuals and orthonormality") {
    for (const Graph& g : {make_path(7), make_cycle(6), make_petersen(),
                           fixture_gstar(), make_hypercube(3)}) {
        SymMatrix l = laplacian(g);
        check_eigen_pairs(l, eig_sym(l));
    }
}

TEST_CASE("eig_sym rejects bad input") {
    SymMatrix m = SymMatrix::zero(2);
    m.at(0, 1) = 1.0;  // at(1,0) left 0: not symmetric
    CHECK_THROWS_AS(eig_sym(m), std::invalid_argument);
    CHECK_THROWS_AS(eig_sym(SymMatrix{}), std::invalid_argument);
}

TEST_CASE("fiedler space of paths") {
    FiedlerSpace p4 = fiedler_space(make_path(4));
    CHECK(p4.d == 1);
    CHECK(p4.mu == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));

    FiedlerSpace p5 = fiedler_space(make_path(5));
    CHECK(p5.d == 1);
    CHECK(p5.mu == doctest::Approx(2.0 - 2.0 * std::cos(kPi / 5.0)).epsilon(1e-9));
}

TEST_CASE("fiedler space multiplicities") {
    FiedlerSpace c4 = fiedler_space(make_cycle(4));
    CHECK(c4.d == 2);
    CHECK(std::fabs(c4.mu - 2.0) <= 1e-9);

    CHECK(fiedler_space(make_star(5)).d == 3);
    CHECK(fiedler_space(make_complete(4)).d == 3);
    CHECK(fiedler_space(make_petersen()).d == 5);
    CHECK(std::fabs(fiedler_space(make_petersen()).mu - 2.0) <= 1e-9);
    CHECK(fiedler_space(make_hypercube(3)).d == 3);
}

TEST_CASE("fiedler basis is orthonormal and sums to zero") {
    for (const Graph& g : {make_cycle(6), make_star(6), make_petersen(),
                           fixture_gstar(), fixture_broom()}) {
        FiedlerSpace fs = fiedler_space(g);
        for (int a = 0; a < fs.d; ++a) {
            std::vector<double> ya = fs.column(a);
            double sum = 0.0;
            for (double x : ya) sum += x;
            CHECK(std::fabs(sum) <= 1e-9);
            for (int b = a; b < fs.d; ++b) {
                double dot = 0.0;
                std::vector<double> yb = fs.column(b);
                for (int i = 0; i < fs.n; ++i) dot += ya[i] * yb[i];
                CHECK(std::fabs(dot - (a == b ? 1.0 : 0.0)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("fiedler space rejects unusable input") {
    CHECK_THROWS_AS(fiedler_space(make_empty(3)), NotConnectedError);
    CHECK_THROWS_AS(fiedler_space(Graph::build({"a", "b", "c", "d"},
                                               {{0, 1}, {2, 3}})),
                    NotConnectedError);
    CHECK_THROWS_AS(fiedler_space(make_path(1)), std::invalid_argument);
}

TEST_CASE("characteristic set of one valuation") {
    Graph c4 = make_cycle(4);
    CHECK(characteristic_set_of_vector(c4, {1, 0, -1, 0}) == VertexSet{1, 3});
    CHECK(characteristic_set_of_vector(c4, {0, 1, 0, -1}) == VertexSet{0, 2});

    Graph p4 = make_path(4);
    CHECK(characteristic_set_of_vector(p4, {3, 1, -1, -3}) == VertexSet{1, 2});
    Graph p5 = make_path(5);
    CHECK(characteristic_set_of_vector(p5, {2, 1, 0, -1, -2}) == VertexSet{2});

    CHECK_THROWS_AS(characteristic_set_of_vector(p4, {1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(characteristic_set_of_vector(p4, {0, 0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("characteristic set is scale invariant") {
    Graph p5 = make_path(5);
    std::vector<double> base = {2, 1, 0, -1, -2};
    VertexSet want = {2};
    for (double scale : {1e6, 1e-6, -1e6, -1e-6, -1.0}) {
        std::vector<double> y = base;
        for (double& x : y) x *= scale;
        CHECK(characteristic_set_of_vector(p5, y) == want);
    }
}

TEST_CASE("characteristic center of standard graphs") {
    CHECK(labels_of(fixture_gstar(), characteristic_center(fixture_gstar())) ==
          std::vector<std::string>{"11", "12", "5", "6"});
    CHECK(characteristic_center(make_cycle(4)) == all_vertices(make_cycle(4)));
    CHECK(characteristic_center(make_cycle(5)) == all_vertices(make_cycle(5)));
    CHECK(characteristic_center(make_complete(4)) ==
          all_vertices(make_complete(4)));
    CHECK(characteristic_center(make_petersen()) ==
          all_vertices(make_petersen()));
    CHECK(characteristic_center(make_path(5)) == VertexSet{2});
    CHECK(characteristic_center(make_path(4)) == VertexSet{1, 2});
    CHECK(characteristic_center(make_star(6)) == VertexSet{0});
}

TEST_CASE("subspace decision agrees with the single-vector set when d is 1") {
    std::mt19937_64 rng(515);
    int used = 0;
    for (int i = 0; used < 15 && i < 200; ++i) {
        Graph g = random_connected_gnp(9, 0.3, rng);
        FiedlerSpace fs = fiedler_space(g);
        if (fs.d != 1) continue;
        ++used;
        CHECK(characteristic_center(g, fs) ==
              characteristic_set_of_vector(g, fs.column(0)));
    }
    CHECK(used == 15);
}

TEST_CASE("classification of fiedler vectors") {
    Graph p4 = make_path(4);
    FiedlerClassification a = classify_fiedler_vector(p4, {3, 1, -1, -3});
    CHECK(a.kind == FiedlerClassification::CaseA);
    CHECK(a.block == VertexSet{1, 2});

    Graph p5 = make_path(5);
    FiedlerClassification b = classify_fiedler_vector(p5, {2, 1, 0, -1, -2});
    CHECK(b.kind == FiedlerClassification::CaseB);
    CHECK(b.zero_vertex == 2);

    Graph star = make_star(5);
    FiedlerClassification c =
        classify_fiedler_vector(star, {0, 1, -1, 0, 0});
    CHECK(c.kind == FiedlerClassification::CaseB);
    CHECK(c.zero_vertex == 0);

    Graph g = fixture_gstar();
    FiedlerSpace fs = fiedler_space(g);
    REQUIRE(fs.d == 1);
    FiedlerClassification d = classify_fiedler_vector(g, fs.column(0));
    CHECK(d.kind == FiedlerClassification::CaseA);
    CHECK(d.block == set_of_labels(g, {"1", "2", "3", "4", "5", "6", "7", "11",
                                       "12", "13", "14", "15"}));
}

TEST_CASE("classification on random tree fiedler vectors") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 20; ++i) {
        Graph t = random_tree(10, rng);
        FiedlerSpace fs = fiedler_space(t);
        FiedlerClassification cl = classify_fiedler_vector(t, fs.column(0));
        VertexSet chi = characteristic_set_of_vector(t, fs.column(0));
        if (cl.kind == FiedlerClassification::CaseB) {
            // The zero vertex is the whole characteristic set on a tree.
            CHECK(chi == VertexSet{cl.zero_vertex});
        } else {
            // Tree blocks are edges; the sign-mixed one is the set.
            CHECK(chi == cl.block);
            CHECK(cl.block.size() == 2);
        }
    }
}

TEST_CASE("bottleneck matrices of small trees") {
    Graph p2 = make_path(2);
    SymMatrix b1 = bottleneck_matrix(p2, 0, {1});
    REQUIRE(b1.n == 1);
    CHECK(b1.at(0, 0) == 1.0);

    Graph p4 = make_path(4);
    SymMatrix b2 = bottleneck_matrix(p4, 1, {2, 3});
    REQUIRE(b2.n == 2);
    CHECK(b2.at(0, 0) == 1.0);
    CHECK(b2.at(0, 1) == 1.0);
    CHECK(b2.at(1, 1) == 2.0);

    SymMatrix b3 = bottleneck_matrix(p4, 1, {0});
    REQUIRE(b3.n == 1);
    CHECK(b3.at(0, 0) == 1.0);

    CHECK_THROWS_AS(bottleneck_matrix(p4, 1, {2}), std::invalid_argument);
    CHECK_THROWS_AS(bottleneck_matrix(p4, 1, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(bottleneck_matrix(make_cycle(4), 0, {1}), NotATreeError);
}

TEST_CASE("bottleneck matrix inverts the laplacian principal submatrix") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 10; ++i) {
        Graph t = random_tree(9, rng);
        SymMatrix l = laplacian(t);
        int v = static_cast<int>(rng() % t.n());
        for (int u : t.neighbors(v)) {
            VertexSet comp;
            std::vector<int> stack{u};
            comp.insert(u);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : t.neighbors(x))
                    if (w != v && !comp.count(w)) {
                        comp.insert(w);
                        stack.push_back(w);
                    }
            }
            SymMatrix m = bottleneck_matrix(t, v, comp);
            std::vector<int> verts(comp.begin(), comp.end());
            const int k = m.n;
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) {
                    double prod = 0.0;
                    for (int s = 0; s < k; ++s)
                        prod += l.at(verts[r], verts[s]) * m.at(s, c);
                    CHECK(std::fabs(prod - (r == c ? 1.0 : 0.0)) <= 1e-9);
                }
        }
    }
}

TEST_CASE("perron values of small matrices") {
    SymMatrix one = SymMatrix::zero(1);
    one.at(0, 0) = 2.0;
    CHECK(perron_value(one) == doctest::Approx(2.0).epsilon(1e-9));

    SymMatrix two = SymMatrix::zero(2);
    two.at(0, 0) = two.at(1, 1) = 2.0;
    two.at(0, 1) = two.at(1, 0) = 1.0;
    CHECK(perron_value(two) == doctest::Approx(3.0).epsilon(1e-9));

    SymMatrix gold = SymMatrix::zero(2);
    gold.at(0, 0) = 1.0;
    gold.at(0, 1) = gold.at(1, 0) = 1.0;
    gold.at(1, 1) = 2.0;
    CHECK(perron_value(gold) ==
          doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));

    SymMatrix bad = SymMatrix::zero(2);
    CHECK_THROWS_AS(perron_value(bad), std::invalid_argument);
}

TEST_CASE("tree characteristic set from perron branches") {
    CHECK(labels_of(fixture_broom(),
                    characteristic_set_tree_perron(fixture_broom())) ==
          std::vector<std::string>{"7", "8"});
    CHECK(characteristic_set_tree_perron(make_path(4)) == VertexSet{1, 2});
    CHECK(characteristic_set_tree_perron(make_path(5)) == VertexSet{2});
    CHECK(characteristic_set_tree_perron(make_star(5)) == VertexSet{0});
    CHECK(characteristic_set_tree_perron(make_path(1)) == VertexSet{0});
    CHECK(characteristic_set_tree_perron(make_path(2)) == VertexSet{0, 1});
    CHECK_THROWS_AS(characteristic_set_tree_perron(make_cycle(4)), NotATreeError);
}

TEST_CASE("spectral and perron routes agree on random trees") {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 20; ++i) {
        Graph t = random_tree(4 + static_cast<int>(rng() % 9), rng);
        CHECK(characteristic_center(t) == characteristic_set_tree_perron(t));
    }
}

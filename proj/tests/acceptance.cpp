// Acceptance gate: one line per criterion, nonzero exit iff any fails.
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "centralparts/centers.hpp"
#include "centralparts/gch.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/golden.hpp"
#include "centralparts/graph.hpp"
#include "centralparts/metric.hpp"
#include "centralparts/spectral.hpp"
#include "centralparts/subgraph_count.hpp"

using namespace centralparts;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
        std::printf("PASS %2d. %s\n", number, title.c_str());
    } else {
        ++failures;
        std::printf("FAIL %2d. %s: %s\n", number, title.c_str(),
                    detail.c_str());
    }
}

std::string first_failure(const std::vector<CheckResult>& results,
                          const std::string& prefix) {
    for (const CheckResult& r : results) {
        if (r.name.rfind(prefix, 0) != 0) continue;
        if (!r.passed) return r.name + " (" + r.detail + ")";
    }
    return "";
}

std::string set_mismatch(const Graph& g, const std::string& what,
                         const VertexSet& got, const VertexSet& want) {
    if (got == want) return "";
    std::ostringstream out;
    out << what << ": got {";
    for (const std::string& l : labels_of(g, got)) out << " " << l;
    out << " } want {";
    for (const std::string& l : labels_of(g, want)) out << " " << l;
    out << " }";
    return out.str();
}

// The six parts with shared distance work; throws propagate to the harness.
std::vector<VertexSet> six_parts(const Graph& g, const CountCaps& caps = {}) {
    DistanceMatrix dm = apsp(g);
    return {center(dm),
            median(dm),
            security_center(security_table(dm)),
            characteristic_center(g),
            subgraph_core(g, CountMode::Induced, caps),
            core_vertices(g, CountMode::Induced, caps)};
}

const char* kPartTitles[6] = {"center",
                              "median",
                              "security center",
                              "characteristic center",
                              "subgraph core",
                              "core vertices"};

std::string check_eigensystem(const Graph& g) {
    SymMatrix l = laplacian(g);
    EigenDecomposition eig = eig_sym(l);
    for (size_t k = 0; k < eig.values.size(); ++k) {
        const auto& v = eig.vectors[k];
        for (int i = 0; i < l.n; ++i) {
            double row = 0.0;
            for (int j = 0; j < l.n; ++j) row += l.at(i, j) * v[j];
            if (std::fabs(row - eig.values[k] * v[i]) > eig.residual_bound) {
                std::ostringstream out;
                out << "residual " << std::fabs(row - eig.values[k] * v[i])
                    << " above " << eig.residual_bound << " (n=" << l.n << ")";
                return out.str();
            }
        }
    }
    for (size_t a = 0; a < eig.vectors.size(); ++a)
        for (size_t b = a; b < eig.vectors.size(); ++b) {
            double dot = 0.0;
            for (int i = 0; i < l.n; ++i)
                dot += eig.vectors[a][i] * eig.vectors[b][i];
            if (std::fabs(dot - (a == b ? 1.0 : 0.0)) > 1e-10)
                return "eigenvector orthonormality drift above 1e-10";
        }
    return "";
}

}  // namespace

int main() {
    const std::vector<CheckResult> golden = run_golden_checks();

    criterion(1, "ring fixture golden values", [&] {
        return first_failure(golden, "gstar-");
    });

    criterion(2, "broom tree golden values", [&] {
        return first_failure(golden, "broom-");
    });

    criterion(3, "path and star closed forms", [&] {
        std::string bad = first_failure(golden, "path-closed-forms");
        if (bad.empty()) bad = first_failure(golden, "star-closed-forms");
        return bad;
    });

    criterion(4, "vertex-transitive families have every part equal to V", [&] {
        std::vector<Graph> graphs;
        for (int n = 3; n <= 10; ++n) graphs.push_back(make_cycle(n));
        for (int n = 2; n <= 7; ++n) graphs.push_back(make_complete(n));
        graphs.push_back(make_petersen());
        graphs.push_back(make_hypercube(3));
        graphs.push_back(make_circulant(8, {1, 3}));
        for (const Graph& g : graphs) {
            VertexSet all = all_vertices(g);
            std::vector<VertexSet> parts = six_parts(g);
            for (int k = 0; k < 6; ++k) {
                std::string bad = set_mismatch(g, kPartTitles[k], parts[k], all);
                if (!bad.empty())
                    return "n=" + std::to_string(g.n()) + ", m=" +
                           std::to_string(g.m()) + ", " + bad;
            }
        }
        return std::string();
    });

    criterion(5, "4-cycle eigenspace and characteristic sets", [&] {
        Graph c4 = make_cycle(4);
        FiedlerSpace fs = fiedler_space(c4);
        if (std::fabs(fs.mu - 2.0) > 1e-9) return std::string("mu is not 2");
        if (fs.d != 2) return std::string("multiplicity is not 2");
        std::string bad = set_mismatch(c4, "valuation (1,0,-1,0)",
                                       characteristic_set_of_vector(
                                           c4, {1, 0, -1, 0}),
                                       {1, 3});
        if (!bad.empty()) return bad;
        bad = set_mismatch(c4, "valuation (0,1,0,-1)",
                           characteristic_set_of_vector(c4, {0, 1, 0, -1}),
                           {0, 2});
        if (!bad.empty()) return bad;
        return set_mismatch(c4, "characteristic center",
                            characteristic_center(c4, fs), all_vertices(c4));
    });

    criterion(6, "supergraph attachment pins the characteristic center", [&] {
        std::vector<Graph> inputs = {make_complete(1), make_empty(3),
                                     make_path(3), make_complete(3)};
        std::mt19937_64 rng(2468);
        int disconnected = 0;
        for (int i = 0; i < 10; ++i) {
            int n = 1 + static_cast<int>(rng() % 7);
            inputs.push_back(random_gnp(n, i % 2 == 0 ? 0.25 : 0.55, rng));
        }
        for (const Graph& g : inputs)
            if (!g.connected()) ++disconnected;
        if (disconnected == 0)
            return std::string("sample set never exercised disconnected input");
        for (const Graph& g : inputs) {
            GchResult r = build_gch(g);
            FiedlerSpace fs = fiedler_space(r.graph);
            if (std::fabs(fs.mu - r.expected_mu) > 1e-9) {
                std::ostringstream out;
                out << "mu " << fs.mu << " vs closed form " << r.expected_mu
                    << " (input n=" << g.n() << ")";
                return out.str();
            }
            if (fs.d != 1)
                return "multiplicity " + std::to_string(fs.d) + " (input n=" +
                       std::to_string(g.n()) + ")";
            VertexSet originals;
            for (int v = 2; v < 2 + g.n(); ++v) originals.insert(v);
            std::string bad =
                set_mismatch(r.graph, "characteristic center",
                             characteristic_center(r.graph, fs), originals);
            if (!bad.empty()) return bad;

            SymMatrix l = laplacian(r.graph);
            for (int i = 0; i < l.n; ++i) {
                double row = 0.0;
                for (int j = 0; j < l.n; ++j)
                    row += l.at(i, j) * r.expected_fiedler[j];
                if (std::fabs(row - r.expected_mu * r.expected_fiedler[i]) >
                    1e-9)
                    return std::string("stored eigenvector residual above 1e-9");
            }
        }
        return std::string();
    });

    criterion(7, "tree oracles agree (recurrence, edge mode, centers)", [&] {
        std::mt19937_64 rng(13579);
        CountCaps caps;
        caps.edge = 16;  // edge-mode default cap is below these sizes
        for (int i = 0; i < 100; ++i) {
            int n = 2 + static_cast<int>(rng() % 15);
            Graph t = random_tree(n, rng);
            PairCountTable table = pair_count_table(t);
            for (int v = 0; v < n; ++v) {
                if (table.single(v) != tree_subtree_count(t, v))
                    return "subtree recurrence mismatch at n=" +
                           std::to_string(n);
                if (table.single(v) !=
                    subgraph_number(t, v, CountMode::EdgeSubgraph, caps))
                    return "edge mode disagrees with induced mode at n=" +
                           std::to_string(n);
                for (int u = v + 1; u < n; ++u)
                    if (table.at(v, u) != tree_pair_count(t, v, u))
                        return "pair recurrence mismatch at n=" +
                               std::to_string(n);
            }
            VertexSet med = median(t);
            if (med != centroid_tree(t))
                return "median and centroid differ at n=" + std::to_string(n);
            if (med != security_center(t))
                return "median and security center differ at n=" +
                       std::to_string(n);
        }
        return std::string();
    });

    criterion(8, "tree structure laws (shape, pendant minimizer, concavity)",
              [&] {
        std::mt19937_64 rng(24680);
        for (int i = 0; i < 200; ++i) {
            int n = 2 + static_cast<int>(rng() % 13);
            Graph t = random_tree(n, rng);
            std::vector<VertexSet> parts = six_parts(t);
            for (int k = 0; k < 6; ++k) {
                const VertexSet& s = parts[k];
                if (s.size() < 1 || s.size() > 2)
                    return std::string(kPartTitles[k]) + " has " +
                           std::to_string(s.size()) + " vertices (n=" +
                           std::to_string(n) + ")";
                if (s.size() == 2 &&
                    !t.has_edge(*s.begin(), *std::next(s.begin())))
                    return std::string(kPartTitles[k]) +
                           " is two non-adjacent vertices";
            }

            PairCountTable table = pair_count_table(t);
            std::vector<BigCount> eps(n);
            for (int v = 0; v < n; ++v) {
                BigCount best = table.single(v);
                bool pendant_attains = n == 1;
                for (int u = 0; u < n; ++u)
                    if (u != v && table.at(v, u) < best) best = table.at(v, u);
                for (int u = 0; u < n; ++u)
                    if (u != v && t.degree(u) == 1 && table.at(v, u) == best)
                        pendant_attains = true;
                if (!pendant_attains)
                    return std::string(
                        "pair-count minimum missed every pendant vertex");
                eps[v] = best;
            }
            for (int v = 0; v < n; ++v)
                for (int u : t.neighbors(v))
                    for (int w : t.neighbors(v)) {
                        if (u >= w) continue;
                        if (2 * eps[v] < eps[u] + eps[w])
                            return std::string("concavity violated");
                        if (t.degree(v) != 2 && 2 * eps[v] == eps[u] + eps[w])
                            return std::string(
                                "concavity tight off a degree-2 vertex");
                    }
        }
        return std::string();
    });

    int core_outside = 0, eccentric_outside = 0;
    criterion(9, "the four metric and spectral parts sit inside one block",
              [&] {
        std::mt19937_64 rng(11111);
        for (int i = 0; i < 200; ++i) {
            int n = 2 + static_cast<int>(rng() % 11);
            double p = 0.2 + 0.1 * static_cast<double>(i % 5);
            Graph g = random_connected_gnp(n, p, rng);
            BlockDecomposition bd = blocks(g);
            std::vector<VertexSet> parts = six_parts(g);
            for (int k = 0; k < 4; ++k)
                if (!contained_in_some_block(bd, parts[k]))
                    return std::string(kPartTitles[k]) +
                           " crosses blocks on: " + serialize(g);
            // Conjecture evidence only: tallied, never fatal.
            if (!contained_in_some_block(bd, parts[4])) ++core_outside;
            if (!contained_in_some_block(bd, parts[5])) ++eccentric_outside;
        }
        return std::string();
    });
    std::printf(
        "      (conjecture tally over 200 graphs: subgraph core outside a "
        "block %d times, core vertices %d times)\n",
        core_outside, eccentric_outside);

    criterion(10, "numeric hygiene (residuals, orthonormality, scaling)", [&] {
        std::vector<Graph> battery = {make_path(7),   make_cycle(6),
                                      make_star(8),   make_complete(5),
                                      make_petersen(), make_hypercube(3),
                                      fixture_gstar(), fixture_broom()};
        std::mt19937_64 rng(55555);
        for (int i = 0; i < 10; ++i)
            battery.push_back(
                random_connected_gnp(3 + static_cast<int>(rng() % 10), 0.35,
                                     rng));
        for (const Graph& g : battery) {
            std::string bad = check_eigensystem(g);
            if (!bad.empty()) return bad;
            FiedlerSpace fs = fiedler_space(g);
            for (int k = 0; k < fs.d; ++k) {
                std::vector<double> y = fs.column(k);
                VertexSet base = characteristic_set_of_vector(g, y);
                for (double scale : {1e6, 1e-6, -1e6, -1e-6}) {
                    std::vector<double> z = y;
                    for (double& x : z) x *= scale;
                    if (characteristic_set_of_vector(g, z) != base)
                        return "characteristic set changed under scaling by " +
                               std::to_string(scale);
                }
            }
        }
        return std::string();
    });

    if (failures == 0) {
        std::printf("all 10 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}

#include "centralparts/golden.hpp"

#include <cmath>
#include <sstream>

#include "centralparts/centers.hpp"
#include "centralparts/gch.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/metric.hpp"
#include "centralparts/spectral.hpp"
#include "centralparts/subgraph_count.hpp"

namespace centralparts {

namespace {

std::string show(const Graph& g, const VertexSet& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const std::string& l : labels_of(g, s)) {
        if (!first) out << ",";
        out << l;
        first = false;
    }
    out << "}";
    return out.str();
}

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
    try {
        CheckResult r = fn();
        r.name = name;
        return r;
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

CheckResult set_result(const Graph& g, const VertexSet& got,
                       const std::vector<std::string>& expected_labels) {
    VertexSet expected = set_of_labels(g, expected_labels);
    CheckResult r;
    r.passed = got == expected;
    if (!r.passed)
        r.detail = "expected " + show(g, expected) + " got " + show(g, got);
    return r;
}

CheckResult ok() { return {"", true, ""}; }
CheckResult fail(const std::string& detail) { return {"", false, detail}; }

// Reference coordinates of the fixture's unit Fiedler vector, vertices 1..15.
constexpr double kGstarFiedler[15] = {
    -0.2485, -0.2837, -0.2623, -0.1883, -0.0166, 0.1584, 0.3018, 0.3772,
    0.3772,  0.3772,  0.1584,  -0.0166, -0.1883, -0.2623, -0.2837};

}  // namespace

std::vector<CheckResult> run_gstar_checks(const Graph& g) {
    std::vector<CheckResult> out;
    out.push_back(guarded("gstar-center", [&] {
        return set_result(g, center(g), {"4", "5", "12", "13"});
    }));
    out.push_back(guarded("gstar-median", [&] {
        return set_result(g, median(g), {"4", "13"});
    }));
    out.push_back(guarded("gstar-security-center", [&] {
        return set_result(g, security_center(g),
                          {"1", "4", "5", "6", "7", "11", "12", "13"});
    }));
    out.push_back(guarded("gstar-characteristic-center", [&] {
        return set_result(g, characteristic_center(g), {"5", "6", "11", "12"});
    }));
    out.push_back(guarded("gstar-mu", [&] {
        double mu = fiedler_space(g).mu;
        if (std::fabs(mu - 0.2) <= 1e-4) return ok();
        std::ostringstream d;
        d << "expected mu 0.2 +- 1e-4, got " << mu;
        return fail(d.str());
    }));
    out.push_back(guarded("gstar-fiedler-multiplicity", [&] {
        int d = fiedler_space(g).d;
        if (d == 1) return ok();
        return fail("expected multiplicity 1, got " + std::to_string(d));
    }));
    out.push_back(guarded("gstar-fiedler-vector", [&] {
        FiedlerSpace fs = fiedler_space(g);
        if (fs.d != 1)
            return fail("multiplicity " + std::to_string(fs.d) + ", not 1");
        std::vector<double> y = fs.column(0);
        int v8 = g.index_of("8");
        if (v8 < 0) return fail("vertex 8 missing");
        if (y[v8] < 0)
            for (double& x : y) x = -x;
        for (int i = 1; i <= 15; ++i) {
            int v = g.index_of(std::to_string(i));
            if (v < 0) return fail("vertex " + std::to_string(i) + " missing");
            double diff = std::fabs(y[v] - kGstarFiedler[i - 1]);
            if (diff > 5e-4) {
                std::ostringstream d;
                d << "coordinate " << i << ": expected " << kGstarFiedler[i - 1]
                  << " got " << y[v];
                return fail(d.str());
            }
        }
        return ok();
    }));
    return out;
}

namespace {

std::vector<CheckResult> run_broom_checks() {
    const Graph t = fixture_broom();
    std::vector<CheckResult> out;
    out.push_back(guarded("broom-center",
                          [&] { return set_result(t, center(t), {"6"}); }));
    out.push_back(guarded("broom-median",
                          [&] { return set_result(t, median(t), {"9"}); }));
    out.push_back(guarded("broom-centroid", [&] {
        CheckResult r = set_result(t, centroid_tree(t), {"9"});
        if (!r.passed) return r;
        int w = branch_weight(t, t.index_of("9"));
        if (w != 8)
            return fail("branch weight at 9: expected 8, got " +
                        std::to_string(w));
        return ok();
    }));
    out.push_back(guarded("broom-security-center", [&] {
        return set_result(t, security_center(t), {"9"});
    }));
    out.push_back(guarded("broom-subgraph-core", [&] {
        return set_result(t, subgraph_core(t), {"10"});
    }));
    out.push_back(guarded("broom-characteristic-center-spectral", [&] {
        return set_result(t, characteristic_center(t), {"7", "8"});
    }));
    out.push_back(guarded("broom-characteristic-center-perron", [&] {
        return set_result(t, characteristic_set_tree_perron(t), {"7", "8"});
    }));
    out.push_back(guarded("broom-core-vertices", [&] {
        return set_result(t, core_vertices(t), {"3"});
    }));
    out.push_back(guarded("broom-eccentric-counts", [&] {
        struct {
            const char* label;
            int expected;
        } cases[] = {{"2", 128}, {"3", 135}, {"4", 134}};
        for (const auto& c : cases) {
            BigCount e = eccentric_subgraph_number(t, t.index_of(c.label));
            if (e != c.expected) {
                std::ostringstream d;
                d << "eccentric number of " << c.label << ": expected "
                  << c.expected << " got " << e;
                return fail(d.str());
            }
        }
        return ok();
    }));
    out.push_back(guarded("broom-pair-counts", [&] {
        int v1 = t.index_of("1"), v3 = t.index_of("3");
        int v10 = t.index_of("10"), v11 = t.index_of("11");
        struct {
            const char* what;
            BigCount got;
            int expected;
        } cases[] = {
            {"count({3,1} avoiding 10)", count_connected(t, {v3, v1}, {v10}), 7},
            {"count({3,1,10})", count_connected(t, {v3, v1, v10}, {}), 128},
            {"pair count f(3,1)", count_connected(t, {v3, v1}, {}), 135},
            {"pair count f(3,11)", count_connected(t, {v3, v11}, {}), 192},
            {"tree DP f(3,1)", tree_pair_count(t, v3, v1), 135},
            {"tree DP f(3,11)", tree_pair_count(t, v3, v11), 192},
        };
        for (const auto& c : cases)
            if (c.got != c.expected) {
                std::ostringstream d;
                d << c.what << ": expected " << c.expected << " got " << c.got;
                return fail(d.str());
            }
        return ok();
    }));
    return out;
}

std::vector<std::string> middle_labels(int n) {
    if (n % 2 == 1) return {std::to_string((n + 1) / 2)};
    return {std::to_string(n / 2), std::to_string(n / 2 + 1)};
}

CheckResult path_closed_forms() {
    for (int n = 2; n <= 12; ++n) {
        const Graph p = make_path(n);
        const std::vector<std::string> mid = middle_labels(n);
        struct {
            const char* what;
            VertexSet got;
        } cases[] = {
            {"center", center(p)},
            {"median", median(p)},
            {"centroid", centroid_tree(p)},
            {"security center", security_center(p)},
            {"characteristic center", characteristic_center(p)},
            {"subgraph core", subgraph_core(p)},
            {"core vertices", core_vertices(p)},
        };
        for (const auto& c : cases) {
            CheckResult r = set_result(p, c.got, mid);
            if (!r.passed)
                return fail("n=" + std::to_string(n) + " " + c.what + ": " +
                            r.detail);
        }
        for (int k = 1; k <= (n + 1) / 2; ++k) {
            BigCount e =
                eccentric_subgraph_number(p, p.index_of(std::to_string(k)));
            if (e != k) {
                std::ostringstream d;
                d << "n=" << n << " eccentric number of " << k << ": expected "
                  << k << " got " << e;
                return fail(d.str());
            }
        }
    }
    return ok();
}

CheckResult star_closed_forms() {
    for (int n = 3; n <= 12; ++n) {
        const Graph s = make_star(n);
        int c = s.index_of("v");
        struct {
            const char* what;
            VertexSet got;
        } cases[] = {
            {"center", center(s)},
            {"median", median(s)},
            {"centroid", centroid_tree(s)},
            {"security center", security_center(s)},
            {"characteristic center", characteristic_center(s)},
            {"subgraph core", subgraph_core(s)},
            {"core vertices", core_vertices(s)},
        };
        for (const auto& chk : cases) {
            CheckResult r = set_result(s, chk.got, {"v"});
            if (!r.passed)
                return fail("n=" + std::to_string(n) + " " + chk.what + ": " +
                            r.detail);
        }
        BigCount center_f = subgraph_number(s, c);
        BigCount center_eps = eccentric_subgraph_number(s, c);
        BigCount leaf_eps = eccentric_subgraph_number(s, s.index_of("1"));
        if (center_f != BigCount(1) << (n - 1))
            return fail("n=" + std::to_string(n) + " subgraph number of center");
        if (center_eps != BigCount(1) << (n - 2))
            return fail("n=" + std::to_string(n) +
                        " eccentric number of center");
        if (leaf_eps != BigCount(1) << (n - 3))
            return fail("n=" + std::to_string(n) + " eccentric number of leaf");
    }
    return ok();
}

double expected_gch_mu(int n) {
    double dn = n;
    return (dn + 2.0 - std::sqrt(dn * dn + 4.0)) / 2.0;
}

std::vector<CheckResult> run_gch_checks() {
    std::vector<CheckResult> out;
    out.push_back(guarded("gch-p5", [&] {
        GchResult r = build_gch(make_complete(1));
        if (r.graph.n() != 5 || r.graph.m() != 4)
            return fail("expected a 5-vertex path shape");
        double mu = fiedler_space(r.graph).mu;
        double want = 2.0 - 2.0 * std::cos(std::acos(-1.0) / 5.0);
        if (std::fabs(r.expected_mu - want) > 1e-12)
            return fail("closed form disagrees with the path spectrum");
        if (std::fabs(mu - r.expected_mu) > 1e-9) {
            std::ostringstream d;
            d << "mu: expected " << r.expected_mu << " got " << mu;
            return fail(d.str());
        }
        return ok();
    }));
    out.push_back(guarded("gch-empty3", [&] {
        GchResult r = build_gch(make_empty(3));
        if (r.graph.n() != 7 || r.graph.m() != 8)
            return fail("expected 7 vertices and 8 edges");
        if (!r.graph.connected()) return fail("result not connected");
        double mu = fiedler_space(r.graph).mu;
        double want = (5.0 - std::sqrt(13.0)) / 2.0;
        if (std::fabs(mu - want) > 1e-9) {
            std::ostringstream d;
            d << "mu: expected " << want << " got " << mu;
            return fail(d.str());
        }
        if (std::fabs(r.expected_mu - expected_gch_mu(3)) > 0)
            return fail("stored mu disagrees with the formula");
        return ok();
    }));
    out.push_back(guarded("gch-chi-p3", [&] {
        GchResult r = build_gch(make_path(3));
        return set_result(r.graph, characteristic_center(r.graph),
                          {"1", "2", "3"});
    }));
    out.push_back(guarded("gch-chi-k3", [&] {
        GchResult r = build_gch(make_complete(3));
        return set_result(r.graph, characteristic_center(r.graph),
                          {"1", "2", "3"});
    }));
    out.push_back(guarded("gch-expected-vector-residual", [&] {
        for (const Graph& g : {make_path(3), make_empty(3), make_complete(4)}) {
            GchResult r = build_gch(g);
            SymMatrix l = laplacian(r.graph);
            double worst = 0.0;
            for (int i = 0; i < l.n; ++i) {
                double row = 0.0;
                for (int j = 0; j < l.n; ++j)
                    row += l.at(i, j) * r.expected_fiedler[j];
                worst = std::max(
                    std::fabs(row - r.expected_mu * r.expected_fiedler[i]),
                    worst);
            }
            if (worst > 1e-9) {
                std::ostringstream d;
                d << "eigen residual " << worst << " exceeds 1e-9";
                return fail(d.str());
            }
        }
        return ok();
    }));
    return out;
}

}  // namespace

std::vector<std::string> golden_check_names() {
    return {
        "gstar-center",
        "gstar-median",
        "gstar-security-center",
        "gstar-characteristic-center",
        "gstar-mu",
        "gstar-fiedler-multiplicity",
        "gstar-fiedler-vector",
        "broom-center",
        "broom-median",
        "broom-centroid",
        "broom-security-center",
        "broom-subgraph-core",
        "broom-characteristic-center-spectral",
        "broom-characteristic-center-perron",
        "broom-core-vertices",
        "broom-eccentric-counts",
        "broom-pair-counts",
        "path-closed-forms",
        "star-closed-forms",
        "gch-p5",
        "gch-empty3",
        "gch-chi-p3",
        "gch-chi-k3",
        "gch-expected-vector-residual",
    };
}

std::vector<CheckResult> run_golden_checks() {
    std::vector<CheckResult> out = run_gstar_checks(fixture_gstar());
    for (auto& r : run_broom_checks()) out.push_back(std::move(r));
    out.push_back(guarded("path-closed-forms", path_closed_forms));
    out.push_back(guarded("star-closed-forms", star_closed_forms));
    for (auto& r : run_gch_checks()) out.push_back(std::move(r));
    return out;
}

}  // namespace centralparts

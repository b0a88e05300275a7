#include "centralparts/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "centralparts/centers.hpp"
#include "centralparts/errors.hpp"
#include "centralparts/metric.hpp"
#include "centralparts/spectral.hpp"

namespace centralparts {

const std::vector<std::string>& part_names() {
    static const std::vector<std::string> names = {
        "center",        "median",        "security_center",
        "characteristic_center", "subgraph_core", "core_vertices"};
    return names;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

}  // namespace

CentralPartsReport compute_report(const Graph& g, const std::string& name,
                                  const ComputeOptions& opts) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    if (!g.connected())
        throw NotConnectedError("central parts undefined: graph not connected");

    std::set<std::string> want;
    if (opts.parts.empty()) {
        want.insert(part_names().begin(), part_names().end());
    } else {
        for (const std::string& p : opts.parts) {
            if (std::find(part_names().begin(), part_names().end(), p) ==
                part_names().end())
                throw std::invalid_argument("unknown part name: " + p);
            want.insert(p);
        }
    }

    CentralPartsReport r;
    r.graph_name = name;
    r.n = g.n();
    r.m = g.m();
    r.mode = opts.mode;
    r.partial = !opts.parts.empty();

    if (g.n() == 1) {
        // Every part of a single vertex is that vertex; no Fiedler data.
        for (const std::string& p : part_names())
            if (want.count(p)) r.parts[p] = {g.label(0)};
        return r;
    }

    std::optional<DistanceMatrix> dm;
    auto distances = [&]() -> const DistanceMatrix& {
        if (!dm) dm = apsp(g);
        return *dm;
    };

    auto record = [&](const std::string& part, auto&& compute) {
        if (!want.count(part)) return;
        auto t0 = Clock::now();
        try {
            r.parts[part] = labels_of(g, compute());
        } catch (const CapExceededError&) {
            r.skipped.insert(part);
        }
        if (opts.timings) r.timings_ms[part] = ms_since(t0);
    };

    record("center", [&] { return center(distances()); });
    record("median", [&] { return median(distances()); });
    record("security_center",
           [&] { return security_center(security_table(distances())); });
    record("characteristic_center", [&] {
        FiedlerSpace fs = fiedler_space(g);
        r.mu = fs.mu;
        r.fiedler_multiplicity = fs.d;
        return characteristic_center(g, fs);
    });
    record("subgraph_core", [&] { return subgraph_core(g, opts.mode, opts.caps); });
    record("core_vertices", [&] { return core_vertices(g, opts.mode, opts.caps); });
    return r;
}

namespace {

nlohmann::json parts_json(const CentralPartsReport& r) {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, labels] : r.parts) p[k] = labels;
    for (const std::string& k : r.skipped) p[k] = "skipped(cap)";
    return p;
}

}  // namespace

std::string render_json(const CentralPartsReport& r) {
    nlohmann::json j;
    if (r.partial) {
        j = parts_json(r);
    } else {
        j = nlohmann::json::object();
        j["graph_name"] = r.graph_name;
        j["n"] = r.n;
        j["m"] = r.m;
        j["count_mode"] = to_string(r.mode);
        j["mu"] = r.mu ? nlohmann::json(*r.mu) : nlohmann::json(nullptr);
        j["fiedler_multiplicity"] = r.fiedler_multiplicity;
        j["parts"] = parts_json(r);
        if (!r.timings_ms.empty()) j["timings_ms"] = r.timings_ms;
    }
    return j.dump(2) + "\n";
}

std::string render_table(const CentralPartsReport& r) {
    std::ostringstream out;
    if (!r.partial) {
        out << "graph: " << r.graph_name << "  (n=" << r.n << ", m=" << r.m
            << ")\n";
        out << "count mode: " << to_string(r.mode) << "\n";
        if (r.mu)
            out << "mu: " << *r.mu << "  (fiedler multiplicity "
                << r.fiedler_multiplicity << ")\n";
    }
    for (const std::string& name : part_names()) {
        bool have = r.parts.count(name) != 0;
        bool skip = r.skipped.count(name) != 0;
        if (!have && !skip) continue;
        out << std::left << std::setw(22) << name << " ";
        if (skip) {
            out << "skipped(cap)";
        } else {
            bool first = true;
            for (const std::string& l : r.parts.at(name)) {
                if (!first) out << " ";
                out << l;
                first = false;
            }
        }
        out << "\n";
    }
    if (!r.timings_ms.empty()) {
        out << "timings_ms:";
        for (const auto& [k, v] : r.timings_ms)
            out << " " << k << "=" << std::fixed << std::setprecision(2) << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace centralparts

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>

#include "centralparts/centers.hpp"
#include "centralparts/generators.hpp"
#include "centralparts/metric.hpp"
#include "centralparts/subgraph_count.hpp"

namespace {

using namespace centralparts;
using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const std::string& what, double serial_ms, double parallel_ms,
            bool identical) {
    std::cout << std::left << std::setw(34) << what << std::right << std::fixed
              << std::setprecision(1) << "serial " << std::setw(9) << serial_ms
              << " ms   parallel " << std::setw(9) << parallel_ms
              << " ms   speedup " << std::setprecision(2)
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
              << "   identical: " << (identical ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
    {
        Graph g = make_circulant(400, {1, 2, 3, 7});
        DistanceMatrix serial, parallel;
        double ts = time_ms([&] { serial = apsp_serial(g); });
        double tp = time_ms([&] { parallel = apsp(g); });
        report("apsp circulant n=400", ts, tp, serial.d == parallel.d);
    }
    {
        Graph g = make_circulant(300, {1, 2, 5});
        DistanceMatrix dm = apsp(g);
        SecurityTable serial, parallel;
        double ts = time_ms([&] { serial = security_table_serial(dm); });
        double tp = time_ms([&] { parallel = security_table(dm); });
        report("security table circulant n=300", ts, tp,
               serial.g == parallel.g && serial.s == parallel.s);
    }
    {
        std::mt19937_64 rng(12345);
        Graph g = random_connected_gnp(18, 0.22, rng);
        PairCountTable serial, parallel;
        double ts = time_ms([&] { serial = pair_count_table_serial(g); });
        double tp = time_ms([&] { parallel = pair_count_table(g); });
        report("induced pair table gnp n=18", ts, tp,
               serial.pair == parallel.pair);
    }
    {
        std::mt19937_64 rng(777);
        Graph t = random_tree(16, rng);
        PairCountTable serial, parallel;
        CountCaps caps;
        caps.edge = 16;
        double ts = time_ms([&] {
            serial = pair_count_table_serial(t, CountMode::EdgeSubgraph, caps);
        });
        double tp = time_ms(
            [&] { parallel = pair_count_table(t, CountMode::EdgeSubgraph, caps); });
        report("edge pair table tree n=16", ts, tp,
               serial.pair == parallel.pair);
    }
    return 0;
}

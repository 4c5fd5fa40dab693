#include "twosq/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "twosq/two_square.hpp"

namespace twosq {

GenerateOptions bench_instance_options(int n, std::uint64_t seed) {
    GenerateOptions g;
    g.n = n;
    g.seed = seed;
    g.max_len = 10;
    g.box = static_cast<long long>(std::ceil(18 * std::sqrt(double(n))));
    g.with_violator = true;
    return g;
}

double loglog_slope(const std::vector<double>& n, const std::vector<double>& t) {
    const std::size_t k = n.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double x = std::log(n[i]), y = std::log(t[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchResult run_bench(const std::vector<int>& sizes, std::uint64_t seed, int reps, int jobs) {
    BenchResult out;
    std::vector<double> xs, ys;
    for (int n : sizes) {
        std::vector<double> times(reps);
        std::vector<std::string> sz(reps), prov(reps);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int r; (r = next++) < reps;) {
                Instance inst = generate_instance(bench_instance_options(n, seed + std::uint64_t(r)));
                auto t0 = std::chrono::steady_clock::now();
                SquarePairSolution sol = solve_two_squares(inst.segments);
                auto t1 = std::chrono::steady_clock::now();
                times[r] = std::chrono::duration<double>(t1 - t0).count();
                sz[r] = sol.size.str();
                prov[r] = sol.provenance;
            }
        };
        std::vector<std::thread> pool;
        for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        std::vector<double> sorted = times;
        std::sort(sorted.begin(), sorted.end());
        BenchPoint p{n, sorted[sorted.size() / 2], sz[0], prov[0]};
        out.points.push_back(p);
        xs.push_back(n);
        ys.push_back(std::max(p.seconds, 1e-9));
    }
    out.slope = xs.size() >= 2 ? loglog_slope(xs, ys) : 0;
    return out;
}

}  // namespace twosq

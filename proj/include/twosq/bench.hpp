#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twosq/instance.hpp"

namespace twosq {

struct BenchPoint {
    int n = 0;
    double seconds = 0;  // median over repetitions
    std::string size;    // exact optimum of the first repetition
    std::string provenance;
};

struct BenchResult {
    std::vector<BenchPoint> points;
    double slope = 0;  // least-squares slope of log(seconds) against log(n)
};

// Planted-violator instance of size n with roughly constant density.
GenerateOptions bench_instance_options(int n, std::uint64_t seed);

BenchResult run_bench(const std::vector<int>& sizes, std::uint64_t seed, int reps = 3, int jobs = 1);

double loglog_slope(const std::vector<double>& n, const std::vector<double>& t);

}  // namespace twosq

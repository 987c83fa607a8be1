#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace frog {

/// One measurement row. Raw order statistics only: the harness makes no
/// comparative claims across curves.
struct BenchResult {
    std::string curve;
    std::string operation;  // scalar_mul_variable_base | scalar_mul_fixed_base | ecdh
    int iterations = 0;
    uint64_t median_ns = 0;
    uint64_t p10_ns = 0;
    uint64_t p90_ns = 0;
    std::string environment;
};

/// Warm-up plus `iters` timed runs per (curve, operation), fresh scalars per
/// run drawn from a seeded stream so measurements are replayable.
std::vector<BenchResult> bench_run(const std::vector<std::string>& curves, int iters,
                                   uint64_t seed);

/// Schema: curve,operation,iterations,median_ns,p10_ns,p90_ns,environment
void write_bench_csv(const std::vector<BenchResult>& rows, std::ostream& os);

}  // namespace frog

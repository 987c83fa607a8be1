#include "frog/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "frog/hippo.hpp"
#include "frog/registry.hpp"

namespace frog {

namespace {

std::string host_description(uint64_t seed) {
    utsname un{};
    std::string host = "unknown";
    if (uname(&un) == 0) {
        host = std::string(un.sysname) + "-" + un.machine;
    }
    return host + " single-thread seed=" + std::to_string(seed);
}

uint64_t percentile(std::vector<uint64_t>& samples, double q) {
    std::sort(samples.begin(), samples.end());
    const size_t idx = static_cast<size_t>(q * static_cast<double>(samples.size() - 1) + 0.5);
    return samples[std::min(idx, samples.size() - 1)];
}

template <typename Setup, typename Op>
BenchResult measure(const std::string& curve, const std::string& op_name, int iters,
                    const std::string& env, Setup&& setup, Op&& op) {
    // Warm-up runs are timed nowhere.
    for (int i = 0; i < 3; ++i) op(setup());
    std::vector<uint64_t> ns(static_cast<size_t>(iters));
    for (int i = 0; i < iters; ++i) {
        auto input = setup();
        auto t0 = std::chrono::steady_clock::now();
        op(input);
        auto t1 = std::chrono::steady_clock::now();
        ns[static_cast<size_t>(i)] =
            static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    BenchResult row;
    row.curve = curve;
    row.operation = op_name;
    row.iterations = iters;
    row.median_ns = percentile(ns, 0.5);
    row.p10_ns = percentile(ns, 0.1);
    row.p90_ns = percentile(ns, 0.9);
    row.environment = env;
    return row;
}

}  // namespace

std::vector<BenchResult> bench_run(const std::vector<std::string>& curves, int iters,
                                   uint64_t seed) {
    if (iters < 10) throw std::invalid_argument("bench_run: need at least 10 iterations");
    const std::string env = host_description(seed);
    SeededRng rng{seed};
    std::vector<BenchResult> rows;

    for (const auto& name : curves) {
        const CurveParams& c = registry_get(name);

        // A fixed random base point for the variable-base runs.
        KeyPair base = keygen(c, rng);

        rows.push_back(measure(
            name, "scalar_mul_variable_base", iters, env,
            [&] { return Scalar(rng.uniform_nonzero_below(c.order()), c); },
            [&](const Scalar& k) { scalar_mul(k, base.pk, c); }));

        rows.push_back(measure(
            name, "scalar_mul_fixed_base", iters, env,
            [&] { return Scalar(rng.uniform_nonzero_below(c.order()), c); },
            [&](const Scalar& k) { scalar_mul(k, c.generator(), c); }));

        rows.push_back(measure(
            name, "ecdh", iters, env, [&] { return keygen(c, rng); },
            [&](const KeyPair& kp) { ecdh(kp.sk, base.pk, c); }));
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchResult>& rows, std::ostream& os) {
    os << "curve,operation,iterations,median_ns,p10_ns,p90_ns,environment\n";
    for (const auto& r : rows) {
        os << r.curve << ',' << r.operation << ',' << r.iterations << ',' << r.median_ns << ','
           << r.p10_ns << ',' << r.p90_ns << ',' << r.environment << '\n';
    }
}

}  // namespace frog

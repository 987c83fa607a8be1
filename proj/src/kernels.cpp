#include "frog/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include "frog/primality.hpp"

namespace frog::kernels {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

namespace {

// chi(v) via Euler's criterion: 0 for v == 0, else +/-1.
inline int64_t quadratic_character(uint64_t v, uint64_t p) {
    if (v == 0) return 0;
    uint64_t e = powmod_u64(v, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

inline uint64_t curve_rhs(uint64_t x, uint64_t a, uint64_t b, uint64_t p) {
    uint64_t x2 = mulmod_u64(x, x, p);
    uint64_t x3 = mulmod_u64(x2, x, p);
    return (x3 + mulmod_u64(a, x, p) + b) % p;
}

}  // namespace

uint64_t curve_point_count_enum(uint64_t p, uint64_t a, uint64_t b, Exec mode) {
    if (p >= (1ull << 26)) {
        throw std::invalid_argument("curve_point_count_enum: modulus too large for enumeration");
    }
    a %= p;
    b %= p;
    int64_t chi_sum = 0;
    if (mode == Exec::Parallel) {
#ifdef FROG_HAVE_OPENMP
#pragma omp parallel for reduction(+ : chi_sum) schedule(static)
#endif
        for (int64_t x = 0; x < static_cast<int64_t>(p); ++x) {
            chi_sum += quadratic_character(curve_rhs(static_cast<uint64_t>(x), a, b, p), p);
        }
    } else {
        for (uint64_t x = 0; x < p; ++x) {
            chi_sum += quadratic_character(curve_rhs(x, a, b, p), p);
        }
    }
    return p + 1 + chi_sum;
}

std::vector<std::pair<uint32_t, int>> prime_factor_scan(const BigInt& n, uint32_t bound, Exec mode) {
    const BigInt mag = n.abs();
    if (mag.is_zero()) throw std::invalid_argument("prime_factor_scan: n must be nonzero");
    const std::vector<uint32_t> primes = sieve_primes(bound);
    const int64_t count = static_cast<int64_t>(primes.size());
    std::vector<int> mult(primes.size(), 0);

    auto multiplicity = [&](uint32_t q) {
        int e = 0;
        BigInt v = mag;
        while (v.divisible_ui(q)) {
            v = v.divexact_ui(q);
            ++e;
        }
        return e;
    };

    if (mode == Exec::Parallel) {
#ifdef FROG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 512)
#endif
        for (int64_t i = 0; i < count; ++i) {
            if (mag.divisible_ui(primes[i])) mult[i] = multiplicity(primes[i]);
        }
    } else {
        for (int64_t i = 0; i < count; ++i) {
            if (mag.divisible_ui(primes[i])) mult[i] = multiplicity(primes[i]);
        }
    }

    std::vector<std::pair<uint32_t, int>> out;
    for (int64_t i = 0; i < count; ++i) {
        if (mult[i] > 0) out.emplace_back(primes[i], mult[i]);
    }
    return out;
}

StripResult strip_small_prime_factors(const BigInt& n, uint32_t bound, Exec mode) {
    if (n.sign() <= 0) throw std::invalid_argument("strip_small_prime_factors: n must be positive");
    StripResult res;
    if (bound < 3) {
        res.cofactor = n;
        return res;
    }
    res.factors = prime_factor_scan(n, bound - 1, mode);
    res.cofactor = n;
    for (const auto& [q, e] : res.factors) {
        for (int k = 0; k < e; ++k) res.cofactor = res.cofactor.divexact_ui(q);
    }
    return res;
}

bool miller_rabin_rounds(const BigInt& n, int rounds, Rng& rng, Exec mode) {
    if (rounds < 1) throw std::invalid_argument("miller_rabin_rounds: rounds must be >= 1");
    const BigInt three{3ul};
    std::vector<BigInt> bases;
    bases.reserve(rounds);
    for (int i = 0; i < rounds; ++i) {
        // uniform in [2, n-2]
        bases.push_back(rng.uniform_below(n - three) + BigInt{2ul});
    }

    bool composite = false;
    if (mode == Exec::Parallel) {
#ifdef FROG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < rounds; ++i) {
            bool flag;
#ifdef FROG_HAVE_OPENMP
#pragma omp atomic read
#endif
            flag = composite;
            if (flag) continue;
            if (!miller_rabin_base(n, bases[static_cast<size_t>(i)])) {
#ifdef FROG_HAVE_OPENMP
#pragma omp atomic write
#endif
                composite = true;
            }
        }
    } else {
        for (int i = 0; i < rounds && !composite; ++i) {
            composite = !miller_rabin_base(n, bases[static_cast<size_t>(i)]);
        }
    }
    return !composite;
}

}  // namespace frog::kernels

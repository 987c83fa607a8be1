#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frog/bigint.hpp"
#include "frog/rng.hpp"

namespace frog::kernels {

/// Every kernel has a serial implementation and an OpenMP one producing
/// identical results; tests compare them and tools/kernel_bench times them.
enum class Exec { Serial, Parallel };

/// Exact #E(F_p) for y^2 = x^3 + ax + b by quadratic-character enumeration
/// over all x (Euler criterion per x). Requires p an odd prime < 2^26.
uint64_t curve_point_count_enum(uint64_t p, uint64_t a, uint64_t b, Exec mode);

/// Factors q < bound removed from n, with multiplicities, plus the cofactor
/// that remains. n > 0.
struct StripResult {
    std::vector<std::pair<uint32_t, int>> factors;
    BigInt cofactor;
};
StripResult strip_small_prime_factors(const BigInt& n, uint32_t bound, Exec mode);

/// All primes q <= bound dividing |n|, with the multiplicity of q in |n|.
std::vector<std::pair<uint32_t, int>> prime_factor_scan(const BigInt& n, uint32_t bound, Exec mode);

/// `rounds` Miller-Rabin tests of odd n > 5 with bases drawn from rng up
/// front (so Serial and Parallel verdicts match for a seeded rng).
bool miller_rabin_rounds(const BigInt& n, int rounds, Rng& rng, Exec mode);

/// 64-bit modular helpers shared by the enumeration kernels.
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

}  // namespace frog::kernels

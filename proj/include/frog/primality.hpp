#pragma once

#include <cstdint>
#include <vector>

#include "frog/bigint.hpp"
#include "frog/rng.hpp"

namespace frog {

/// Strong-probable-prime test to one base. n must be odd and > 3.
bool miller_rabin_base(const BigInt& n, const BigInt& base);

/// Strong Lucas test with Selfridge method-A parameters.
/// n must be odd, > 3, and not a perfect square.
bool strong_lucas_selfridge(const BigInt& n);

/// Baillie-PSW: trial division by small primes, MR base 2, strong Lucas.
bool baillie_psw(const BigInt& n);

/// Baillie-PSW plus `rounds` Miller-Rabin rounds with uniformly random bases.
/// This is the project's primality policy everywhere the source material
/// treats an order or modulus as proven prime (certificates are out of scope).
bool is_probable_prime(const BigInt& n, int rounds = 64, Rng* rng = nullptr);

/// Ascending primes <= bound (Eratosthenes).
std::vector<uint32_t> sieve_primes(uint32_t bound);

/// Cached primes below 10^6, the trial-division table for twist stripping.
const std::vector<uint32_t>& small_primes_million();

}  // namespace frog

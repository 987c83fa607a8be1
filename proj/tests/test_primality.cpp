#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frog/primality.hpp"
#include "frog/registry.hpp"
#include "oracles.hpp"

using frog::baillie_psw;
using frog::BigInt;
using frog::is_probable_prime;

TEST_CASE("small knowns") {
    CHECK(is_probable_prime(BigInt{97ul}, 4));
    CHECK(is_probable_prime(BigInt{2ul}, 1));
    CHECK(is_probable_prime(BigInt{3ul}, 1));
    CHECK_FALSE(is_probable_prime(BigInt{1ul}, 1));
    CHECK_FALSE(is_probable_prime(BigInt{0ul}, 1));
    CHECK_FALSE(is_probable_prime(BigInt{561ul}, 4));   // Carmichael
    CHECK_FALSE(is_probable_prime(BigInt{1105ul}, 4));  // Carmichael
    CHECK_FALSE(is_probable_prime(BigInt{2047ul}, 4));  // 2-spsp
    CHECK_FALSE(is_probable_prime(BigInt{3277ul}, 4));  // 2-spsp
    CHECK_THROWS_AS(is_probable_prime(BigInt{97ul}, 0), std::invalid_argument);
}

TEST_CASE("agrees with trial division below 10^6") {
    // The exhaustive oracle for the whole small range.
    auto primes = frog::sieve_primes(1000000);
    size_t idx = 0;
    frog::SeededRng rng{1};
    for (uint64_t n = 0; n < 1000000; ++n) {
        bool expected = idx < primes.size() && primes[idx] == n;
        if (expected) ++idx;
        bool got = baillie_psw(BigInt{static_cast<unsigned long>(n)});
        if (got != expected) {
            CHECK_MESSAGE(got == expected, "disagreement at n = ", n);
        }
    }
    CHECK(idx == primes.size());
    // Spot-check the sieve itself against direct division.
    for (uint64_t n : {2ull, 999983ull, 999982ull, 524287ull, 65537ull}) {
        CHECK(oracle::trial_division_prime(n) ==
              baillie_psw(BigInt{static_cast<unsigned long>(n)}));
    }
}

TEST_CASE("full test with random rounds matches bpsw on a random sample") {
    frog::SeededRng rng{5};
    for (int i = 0; i < 200; ++i) {
        BigInt n = rng.uniform_below(BigInt{1000000ul});
        CHECK(is_probable_prime(n, 8, &rng) == baillie_psw(n));
    }
}

TEST_CASE("mersenne exponents") {
    CHECK(is_probable_prime(BigInt::pow2(89) - BigInt{1ul}, 16));
    CHECK(is_probable_prime(BigInt::pow2(107) - BigInt{1ul}, 16));
    CHECK_FALSE(is_probable_prime(BigInt::pow2(101) - BigInt{1ul}, 16));
}

TEST_CASE("published field modulus and group order are probable primes") {
    const auto& frog522 = frog::registry_get("eccfrog522pp");
    CHECK(is_probable_prime(frog522.field().modulus(), 64));
    CHECK(is_probable_prime(frog522.order(), 64));
    CHECK_FALSE(is_probable_prime(frog522.order() + BigInt{1ul}, 1));  // even
}

TEST_CASE("strong lucas rejects classic 2-spsp stragglers") {
    // Strong pseudoprimes to base 2 that BPSW's Lucas stage must catch.
    for (unsigned long n : {2047ul, 3277ul, 4033ul, 4681ul, 8321ul, 15841ul, 29341ul}) {
        CHECK_FALSE(baillie_psw(BigInt{n}));
    }
}

TEST_CASE("sieve basics") {
    auto p10 = frog::sieve_primes(10);
    CHECK(p10 == std::vector<uint32_t>{2, 3, 5, 7});
    CHECK(frog::small_primes_million().size() == 78498);
    CHECK(frog::small_primes_million().back() == 999983);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frog/kernels.hpp"
#include "frog/primality.hpp"
#include "frog/registry.hpp"
#include "oracles.hpp"

using namespace frog;
using kernels::Exec;

TEST_CASE("u64 modular helpers") {
    CHECK(kernels::mulmod_u64(0xffffffffffffffffull, 0xffffffffffffffffull, 1000003) ==
          (static_cast<__uint128_t>(0xffffffffffffffffull) * 0xffffffffffffffffull) % 1000003);
    CHECK(kernels::powmod_u64(2, 10, 1000003) == 1024);
    CHECK(kernels::powmod_u64(5, 1000002, 1000003) == 1);  // Fermat
}

TEST_CASE("enumeration point count: serial and parallel agree with the table oracle") {
    SeededRng rng{23};
    uint64_t p = 65539;  // prime, 17 bits
    for (int i = 0; i < 12; ++i) {
        uint64_t a = p - 9;
        uint8_t buf[4];
        rng.fill(buf);
        uint64_t b = (static_cast<uint64_t>(buf[0]) << 8 | buf[1]) % p;
        if ((4 * a % p * a % p * a % p + 27 * b % p * b % p) % p == 0) continue;
        uint64_t serial = kernels::curve_point_count_enum(p, a, b, Exec::Serial);
        uint64_t parallel = kernels::curve_point_count_enum(p, a, b, Exec::Parallel);
        uint64_t expected = oracle::count_points_table(p, a, b);
        CHECK(serial == expected);
        CHECK(parallel == expected);
    }
    CHECK_THROWS_AS(kernels::curve_point_count_enum(1ull << 27, 1, 1, Exec::Serial),
                    std::invalid_argument);
}

TEST_CASE("prime factor scan and stripping") {
    // 2^4 * 3^2 * 5 * 7919 * large prime
    BigInt n = BigInt{16ul} * BigInt{9ul} * BigInt{5ul} * BigInt{7919ul} *
               (BigInt::pow2(89) - BigInt{1ul});
    for (Exec mode : {Exec::Serial, Exec::Parallel}) {
        auto scan = kernels::prime_factor_scan(n, 10000, mode);
        REQUIRE(scan.size() == 4);
        CHECK(scan[0] == std::pair<uint32_t, int>{2, 4});
        CHECK(scan[1] == std::pair<uint32_t, int>{3, 2});
        CHECK(scan[2] == std::pair<uint32_t, int>{5, 1});
        CHECK(scan[3] == std::pair<uint32_t, int>{7919, 1});

        auto strip = kernels::strip_small_prime_factors(n, 10000, mode);
        CHECK(strip.cofactor == BigInt::pow2(89) - BigInt{1ul});
        CHECK(strip.factors == scan);
    }
    // negative input scans its magnitude
    auto neg = kernels::prime_factor_scan(-BigInt{12ul}, 100, Exec::Serial);
    CHECK(neg.size() == 2);
}

TEST_CASE("serial and parallel scans agree on random inputs") {
    SeededRng rng{31};
    for (int i = 0; i < 10; ++i) {
        BigInt n = rng.uniform_below(BigInt::pow2(256)) + BigInt{2ul};
        CHECK(kernels::prime_factor_scan(n, 20000, Exec::Serial) ==
              kernels::prime_factor_scan(n, 20000, Exec::Parallel));
    }
}

TEST_CASE("miller-rabin rounds: same verdicts in both modes") {
    const BigInt prime = BigInt::pow2(107) - BigInt{1ul};
    const BigInt composite = prime * (BigInt::pow2(89) - BigInt{1ul});
    for (Exec mode : {Exec::Serial, Exec::Parallel}) {
        SeededRng rng{55};
        CHECK(kernels::miller_rabin_rounds(prime, 24, rng, mode));
        SeededRng rng2{55};
        CHECK_FALSE(kernels::miller_rabin_rounds(composite, 24, rng2, mode));
    }
}

TEST_CASE("flagship twist order strips to a ~505-bit probable prime") {
    const auto& c = registry_get("eccfrog522pp");
    BigInt twist = BigInt{2ul} * (c.field().modulus() + BigInt{1ul}) - c.order();
    auto serial = kernels::strip_small_prime_factors(twist, 1000000, Exec::Serial);
    auto parallel = kernels::strip_small_prime_factors(twist, 1000000, Exec::Parallel);
    CHECK(serial.cofactor == parallel.cofactor);
    CHECK(serial.factors == parallel.factors);
    size_t bits = serial.cofactor.bit_length();
    CHECK(bits >= 500);
    CHECK(bits <= 510);
    CHECK(is_probable_prime(serial.cofactor, 32));
}

#pragma once

#include <cstdint>
#include <span>

#include "frog/bigint.hpp"

namespace frog {

/// Byte-stream randomness source. Integer helpers use rejection sampling so
/// results are uniform and, for seeded sources, reproducible.
class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(std::span<uint8_t> out) = 0;

    /// Uniform integer in [0, n), n > 0.
    BigInt uniform_below(const BigInt& n);
    /// Uniform integer in [1, n-1], n > 2. The keygen path.
    BigInt uniform_nonzero_below(const BigInt& n);
};

/// Process CSPRNG (OpenSSL RAND_bytes). Throws on entropy failure.
class SystemRng final : public Rng {
public:
    void fill(std::span<uint8_t> out) override;
};

/// Deterministic xoshiro256** stream for tests and replayable benchmarks.
/// Not for key material.
class SeededRng final : public Rng {
public:
    explicit SeededRng(uint64_t seed);
    void fill(std::span<uint8_t> out) override;

private:
    uint64_t next();
    uint64_t s_[4];
};

}  // namespace frog

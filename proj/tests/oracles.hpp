#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive: affine chord-tangent with extended-gcd inversion,
// square-table point counting, trial-division primality. None of them share
// code paths with the library routines they check.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "frog/bigint.hpp"

namespace oracle {

struct AffinePt {
    bool inf = true;
    frog::BigInt x, y;
};

inline AffinePt pt(const frog::BigInt& x, const frog::BigInt& y) { return {false, x, y}; }

inline bool eq(const AffinePt& p, const AffinePt& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return p.x == q.x && p.y == q.y;
}

// Chord-tangent law straight from the textbook formulas.
inline AffinePt add(const AffinePt& p, const AffinePt& q, const frog::BigInt& a,
                    const frog::BigInt& mod) {
    using frog::BigInt;
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x && (p.y + q.y).mod(mod).is_zero()) return {};
    BigInt slope;
    if (p.x == q.x && p.y == q.y) {
        BigInt num = (BigInt{3ul} * p.x * p.x + a).mod(mod);
        auto inv = (BigInt{2ul} * p.y).mod(mod).invert_mod(mod);
        if (!inv) throw std::logic_error("oracle add: tangent denominator not invertible");
        slope = (num * *inv).mod(mod);
    } else {
        BigInt num = (q.y - p.y).mod(mod);
        auto inv = (q.x - p.x).mod(mod).invert_mod(mod);
        if (!inv) throw std::logic_error("oracle add: chord denominator not invertible");
        slope = (num * *inv).mod(mod);
    }
    BigInt x3 = (slope * slope - p.x - q.x).mod(mod);
    BigInt y3 = (slope * (p.x - x3) - p.y).mod(mod);
    return pt(x3, y3);
}

inline AffinePt scalar_mul(const frog::BigInt& k, const AffinePt& p, const frog::BigInt& a,
                           const frog::BigInt& mod) {
    AffinePt acc;
    for (size_t i = k.bit_length(); i-- > 0;) {
        acc = add(acc, acc, a, mod);
        if (k.test_bit(i)) acc = add(acc, p, a, mod);
    }
    return acc;
}

// All finite points of y^2 = x^3 + ax + b over F_p, p small.
inline std::vector<AffinePt> enumerate_points(uint64_t p, uint64_t a, uint64_t b) {
    std::vector<AffinePt> out;
    std::vector<std::vector<uint64_t>> roots(p);
    for (uint64_t y = 0; y < p; ++y) roots[(y * y) % p].push_back(y);
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t rhs = ((x * x % p) * x + a * x + b) % p;
        for (uint64_t y : roots[rhs]) {
            out.push_back(pt(frog::BigInt{static_cast<unsigned long>(x)},
                             frog::BigInt{static_cast<unsigned long>(y)}));
        }
    }
    return out;
}

// #E via a table of squares; includes the point at infinity.
inline uint64_t count_points_table(uint64_t p, uint64_t a, uint64_t b) {
    std::vector<uint8_t> is_square(p, 0);
    for (uint64_t y = 0; y < p; ++y) {
        is_square[static_cast<size_t>((static_cast<__uint128_t>(y) * y) % p)] = 1;
    }
    uint64_t count = 1;  // infinity
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t x2 = static_cast<uint64_t>((static_cast<__uint128_t>(x) * x) % p);
        uint64_t x3 = static_cast<uint64_t>((static_cast<__uint128_t>(x2) * x) % p);
        uint64_t rhs = (x3 + static_cast<uint64_t>((static_cast<__uint128_t>(a) * x) % p) + b) % p;
        if (rhs == 0) {
            count += 1;
        } else if (is_square[static_cast<size_t>(rhs)]) {
            count += 2;
        }
    }
    return count;
}

inline bool trial_division_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace oracle

#include "frog/primality.hpp"

#include <stdexcept>

#include "frog/kernels.hpp"

namespace frog {

bool miller_rabin_base(const BigInt& n, const BigInt& base) {
    const BigInt one{1ul};
    const BigInt n_minus_1 = n - one;
    BigInt d = n_minus_1;
    unsigned long s = 0;
    while (d.is_even()) {
        d = d >> 1;
        ++s;
    }
    BigInt x = base.mod(n).pow_mod(d, n);
    if (x == one || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x).mod(n);
        if (x == n_minus_1) return true;
    }
    return false;
}

namespace {

// Halve a residue mod odd n.
BigInt half_mod(const BigInt& v, const BigInt& n) {
    if (v.is_even()) return v >> 1;
    return (v + n) >> 1;
}

}  // namespace

bool strong_lucas_selfridge(const BigInt& n) {
    // Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) == -1.
    BigInt d{5ul};
    bool negative = false;
    for (;;) {
        BigInt cand = negative ? -d : d;
        int j = jacobi(cand, n);
        if (j == -1) {
            d = cand;
            break;
        }
        if (j == 0) {
            // Shared factor; composite unless n itself is that small value.
            return n == d;
        }
        d += BigInt{2ul};
        negative = !negative;
    }

    // P = 1, Q = (1 - D) / 4; indices run over n + 1 = q * 2^s.
    BigInt q_param = (BigInt{1ul} - d) / BigInt{4ul};
    BigInt index = n + BigInt{1ul};
    unsigned long s = 0;
    while (index.is_even()) {
        index = index >> 1;
        ++s;
    }

    // Binary chain for U_index, V_index, Q^index.
    BigInt u{1ul}, v{1ul}, qk = q_param.mod(n);
    for (size_t i = index.bit_length() - 1; i-- > 0;) {
        // double: k -> 2k
        u = (u * v).mod(n);
        v = ((v * v) - (qk + qk)).mod(n);
        qk = (qk * qk).mod(n);
        if (index.test_bit(i)) {
            // increment: 2k -> 2k+1 (P == 1)
            BigInt u_next = half_mod((u + v).mod(n), n);
            BigInt v_next = half_mod((d * u + v).mod(n), n);
            u = std::move(u_next);
            v = std::move(v_next);
            qk = (qk * q_param).mod(n);
        }
    }

    if (u.is_zero() || v.is_zero()) return true;
    for (unsigned long r = 1; r < s; ++r) {
        v = ((v * v) - (qk + qk)).mod(n);
        if (v.is_zero()) return true;
        qk = (qk * qk).mod(n);
    }
    return false;
}

bool baillie_psw(const BigInt& n) {
    if (n < BigInt{2ul}) return false;
    static const uint32_t kSmall[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                      41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (uint32_t p : kSmall) {
        if (n == BigInt{static_cast<unsigned long>(p)}) return true;
        if (n.divisible_ui(p)) return false;
    }
    if (n.is_perfect_square()) return false;
    if (!miller_rabin_base(n, BigInt{2ul})) return false;
    return strong_lucas_selfridge(n);
}

bool is_probable_prime(const BigInt& n, int rounds, Rng* rng) {
    if (rounds < 1) throw std::invalid_argument("is_probable_prime: rounds must be >= 1");
    if (!baillie_psw(n)) return false;
    if (n < BigInt{7ul}) return true;  // 2, 3, 5 settled above; no room for random bases
    SystemRng fallback;
    return kernels::miller_rabin_rounds(n, rounds, rng ? *rng : fallback,
                                        kernels::Exec::Parallel);
}

std::vector<uint32_t> sieve_primes(uint32_t bound) {
    std::vector<uint32_t> out;
    if (bound < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(bound) + 1, false);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

const std::vector<uint32_t>& small_primes_million() {
    static const std::vector<uint32_t> primes = sieve_primes(1000000u - 1);
    return primes;
}

}  // namespace frog

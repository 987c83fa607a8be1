#pragma once

#include <gmp.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frog {

/// Arbitrary-precision signed integer with value semantics (GMP-backed).
/// Division and remainder are floor-style, so `mod` of a positive modulus
/// is always in [0, m).
class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long>(v)) {}

    /// Parses decimal, or hex with a "0x" prefix.
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 0) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: malformed integer literal: " + s);
        }
    }

    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    static BigInt from_bytes_be(std::span<const uint8_t> bytes) {
        BigInt r;
        if (!bytes.empty()) mpz_import(r.z_, bytes.size(), 1, 1, 1, 0, bytes.data());
        return r;
    }
    static BigInt from_bytes_le(std::span<const uint8_t> bytes) {
        BigInt r;
        if (!bytes.empty()) mpz_import(r.z_, bytes.size(), -1, 1, 1, 0, bytes.data());
        return r;
    }
    static BigInt pow2(unsigned long k) {
        BigInt r{1ul};
        mpz_mul_2exp(r.z_, r.z_, k);
        return r;
    }

    std::string to_dec() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        free_str(s);
        return out;
    }
    std::string to_hex() const {
        char* s = mpz_get_str(nullptr, 16, z_);
        std::string out(s);
        free_str(s);
        return out;
    }

    /// Big-endian magnitude, zero-padded on the left to `width` octets.
    /// Throws if the value is negative or does not fit.
    std::vector<uint8_t> to_bytes_be(size_t width) const {
        if (sign() < 0) throw std::domain_error("BigInt: negative value has no octet encoding");
        size_t need = (mpz_sizeinbase(z_, 2) + 7) / 8;
        if (is_zero()) need = 0;
        if (need > width) throw std::domain_error("BigInt: value too large for requested width");
        std::vector<uint8_t> out(width, 0);
        size_t count = 0;
        if (need > 0) mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, z_);
        return out;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_fdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_fdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r.z_, a.z_);
        return r;
    }
    friend BigInt operator<<(const BigInt& a, unsigned long k) {
        BigInt r;
        mpz_mul_2exp(r.z_, a.z_, k);
        return r;
    }
    friend BigInt operator>>(const BigInt& a, unsigned long k) {
        BigInt r;
        mpz_fdiv_q_2exp(r.z_, a.z_, k);
        return r;
    }
    BigInt& operator+=(const BigInt& b) {
        mpz_add(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        mpz_sub(z_, z_, b.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        mpz_mul(z_, z_, b.z_);
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        int c = mpz_cmp(a.z_, b.z_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    friend bool operator==(const BigInt& a, unsigned long b) { return mpz_cmp_ui(a.z_, b) == 0; }

    /// Canonical residue in [0, m) for m > 0.
    BigInt mod(const BigInt& m) const {
        BigInt r;
        mpz_fdiv_r(r.z_, z_, m.z_);
        return r;
    }

    BigInt pow_mod(const BigInt& exp, const BigInt& m) const {
        BigInt r;
        mpz_powm(r.z_, z_, exp.z_, m.z_);
        return r;
    }
    /// Side-channel-hardened modular exponentiation (odd modulus, exp > 0).
    BigInt pow_mod_sec(const BigInt& exp, const BigInt& m) const {
        BigInt r;
        mpz_powm_sec(r.z_, z_, exp.z_, m.z_);
        return r;
    }
    BigInt pow_ui(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.z_, z_, e);
        return r;
    }

    std::optional<BigInt> invert_mod(const BigInt& m) const {
        BigInt r;
        if (mpz_invert(r.z_, z_, m.z_) == 0) return std::nullopt;
        return r;
    }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }
    BigInt sqrt_floor() const {
        BigInt r;
        mpz_sqrt(r.z_, z_);
        return r;
    }
    bool is_perfect_square() const { return mpz_perfect_square_p(z_) != 0; }

    size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
    bool test_bit(unsigned long i) const { return mpz_tstbit(z_, i) != 0; }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_odd() const { return mpz_odd_p(z_) != 0; }
    bool is_even() const { return mpz_even_p(z_) != 0; }
    int sign() const { return mpz_sgn(z_); }

    bool divisible_ui(unsigned long d) const { return mpz_divisible_ui_p(z_, d) != 0; }
    unsigned long mod_ui(unsigned long d) const { return mpz_fdiv_ui(z_, d); }
    BigInt divexact_ui(unsigned long d) const {
        BigInt r;
        mpz_divexact_ui(r.z_, z_, d);
        return r;
    }

    bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
    unsigned long to_ulong() const {
        if (!fits_ulong()) throw std::domain_error("BigInt: value does not fit in unsigned long");
        return mpz_get_ui(z_);
    }

    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt lcm(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    /// Jacobi symbol (a/n), n odd positive.
    friend int jacobi(const BigInt& a, const BigInt& n) { return mpz_jacobi(a.z_, n.z_); }

    friend void swap(BigInt& a, BigInt& b) noexcept { mpz_swap(a.z_, b.z_); }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    static void free_str(char* s) {
        void (*freefunc)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefunc);
        freefunc(s, 0);
    }

    mpz_t z_;
};

inline std::string to_string(const BigInt& v) { return v.to_dec(); }

}  // namespace frog

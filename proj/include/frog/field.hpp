#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>

#include "frog/bigint.hpp"

namespace frog {

class PrimeField;

/// Thrown when elements of two different fields are combined.
struct FieldMismatchError : std::invalid_argument {
    FieldMismatchError() : std::invalid_argument("field mismatch: operands belong to different prime fields") {}
};

/// Residue modulo the field prime, always held canonically in [0, p).
/// Elements reference their PrimeField; the field must outlive them
/// (CurveParams and the registry own fields via shared_ptr).
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const PrimeField& field, const BigInt& value);

    const BigInt& value() const { return v_; }
    const PrimeField& field() const { return *f_; }
    bool is_zero() const { return v_.is_zero(); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement square() const;

    /// Multiplicative inverse by Fermat exponentiation (field prime assumed).
    /// Throws std::domain_error on zero.
    FieldElement invert() const;

    FieldElement pow(const BigInt& e) const;

    /// True iff the element is a square (0 counts as a square).
    bool is_square() const;

    /// Both square roots (r, p-r) with r <= p-r, or nullopt for a non-residue.
    /// sqrt(0) yields (0, 0).
    std::optional<std::pair<FieldElement, FieldElement>> sqrt() const;

    bool operator==(const FieldElement& o) const;

    /// Fixed-width big-endian encoding, ceil(bits(p)/8) octets.
    std::vector<uint8_t> to_bytes() const;

private:
    friend class PrimeField;
    FieldElement(const PrimeField* f, BigInt v) : f_(f), v_(std::move(v)) {}
    void check_same_field(const FieldElement& o) const;

    const PrimeField* f_ = nullptr;
    BigInt v_;
};

/// Immutable odd prime modulus > 3 plus derived constants.
class PrimeField {
public:
    explicit PrimeField(const BigInt& modulus);

    const BigInt& modulus() const { return p_; }
    size_t bit_length() const { return bits_; }
    size_t byte_length() const { return (bits_ + 7) / 8; }

    FieldElement element(const BigInt& v) const { return FieldElement(this, v.mod(p_)); }
    FieldElement zero() const { return FieldElement(this, BigInt{}); }
    FieldElement one() const { return FieldElement(this, BigInt{1ul}); }
    FieldElement from_bytes(std::span<const uint8_t> be) const {
        return element(BigInt::from_bytes_be(be));
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    BigInt p_;
    size_t bits_;
};

/// Interprets a 64-octet digest as an unsigned integer and reduces it mod m.
enum class DigestEndian { Big, Little };
BigInt int_from_digest(std::span<const uint8_t> digest, const BigInt& m,
                       DigestEndian endian = DigestEndian::Big);

}  // namespace frog

#include "frog/field.hpp"

namespace frog {

PrimeField::PrimeField(const BigInt& modulus) : p_(modulus) {
    if (!(p_ > BigInt{3ul}) || p_.is_even()) {
        throw std::invalid_argument("PrimeField: modulus must be odd and > 3");
    }
    bits_ = p_.bit_length();
}

FieldElement::FieldElement(const PrimeField& field, const BigInt& value)
    : f_(&field), v_(value.mod(field.modulus())) {}

void FieldElement::check_same_field(const FieldElement& o) const {
    if (f_ == nullptr || o.f_ == nullptr || !(*f_ == *o.f_)) throw FieldMismatchError{};
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(o);
    BigInt s = v_ + o.v_;
    if (s >= f_->modulus()) s -= f_->modulus();
    return FieldElement(f_, std::move(s));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(o);
    BigInt s = v_ - o.v_;
    if (s.sign() < 0) s += f_->modulus();
    return FieldElement(f_, std::move(s));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(o);
    return FieldElement(f_, (v_ * o.v_).mod(f_->modulus()));
}

FieldElement FieldElement::operator-() const {
    if (v_.is_zero()) return *this;
    return FieldElement(f_, f_->modulus() - v_);
}

FieldElement FieldElement::square() const {
    return FieldElement(f_, (v_ * v_).mod(f_->modulus()));
}

FieldElement FieldElement::invert() const {
    if (v_.is_zero()) throw std::domain_error("FieldElement: zero has no inverse");
    // Fermat: a^(p-2). Keeps the secret path free of gcd branching.
    return FieldElement(f_, v_.pow_mod(f_->modulus() - BigInt{2ul}, f_->modulus()));
}

FieldElement FieldElement::pow(const BigInt& e) const {
    if (e.sign() < 0) return invert().pow(-e);
    return FieldElement(f_, v_.pow_mod(e, f_->modulus()));
}

bool FieldElement::is_square() const {
    if (v_.is_zero()) return true;
    return jacobi(v_, f_->modulus()) == 1;
}

std::optional<std::pair<FieldElement, FieldElement>> FieldElement::sqrt() const {
    const BigInt& p = f_->modulus();
    if (v_.is_zero()) return std::make_pair(f_->zero(), f_->zero());
    if (jacobi(v_, p) != 1) return std::nullopt;

    BigInt r;
    if (p.mod_ui(4) == 3) {
        r = v_.pow_mod((p + BigInt{1ul}) >> 2, p);
    } else {
        // Tonelli-Shanks. p-1 = q * 2^s with q odd.
        BigInt q = p - BigInt{1ul};
        unsigned long s = 0;
        while (q.is_even()) {
            q = q >> 1;
            ++s;
        }
        // A quadratic non-residue z.
        BigInt z{2ul};
        while (jacobi(z, p) != -1) z += BigInt{1ul};

        BigInt m{s};
        BigInt c = z.pow_mod(q, p);
        BigInt t = v_.pow_mod(q, p);
        r = v_.pow_mod((q + BigInt{1ul}) >> 1, p);
        while (!(t == BigInt{1ul})) {
            // Least i with t^(2^i) == 1.
            BigInt t2 = t;
            unsigned long i = 0;
            while (!(t2 == BigInt{1ul})) {
                t2 = (t2 * t2).mod(p);
                ++i;
            }
            BigInt exp = BigInt::pow2(m.to_ulong() - i - 1);
            BigInt bfac = c.pow_mod(exp, p);
            m = BigInt{i};
            c = (bfac * bfac).mod(p);
            t = (t * c).mod(p);
            r = (r * bfac).mod(p);
        }
    }

    BigInt other = p - r;
    if (other < r) swap(r, other);
    return std::make_pair(FieldElement(f_, std::move(r)), FieldElement(f_, std::move(other)));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (f_ == nullptr || o.f_ == nullptr) return f_ == o.f_ && v_ == o.v_;
    return *f_ == *o.f_ && v_ == o.v_;
}

std::vector<uint8_t> FieldElement::to_bytes() const {
    return v_.to_bytes_be(f_->byte_length());
}

BigInt int_from_digest(std::span<const uint8_t> digest, const BigInt& m, DigestEndian endian) {
    if (digest.size() != 64) {
        throw std::invalid_argument("int_from_digest: digest must be exactly 64 octets");
    }
    if (!(m > BigInt{1ul})) throw std::invalid_argument("int_from_digest: modulus must exceed 1");
    BigInt v = endian == DigestEndian::Big ? BigInt::from_bytes_be(digest)
                                           : BigInt::from_bytes_le(digest);
    return v.mod(m);
}

}  // namespace frog

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "frog/field.hpp"

namespace frog {

/// Group element of a short-Weierstrass curve: the identity, or an affine
/// pair satisfying y^2 = x^3 + ax + b. Internal routines use Jacobian
/// coordinates; everything crossing this API is canonical affine.
class Point {
public:
    Point() = default;
    static Point identity() { return Point{}; }
    static Point affine(FieldElement x, FieldElement y) {
        Point p;
        p.identity_ = false;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    bool is_identity() const { return identity_; }
    const FieldElement& x() const { return x_; }
    const FieldElement& y() const { return y_; }

    bool operator==(const Point& o) const {
        if (identity_ || o.identity_) return identity_ == o.identity_;
        return x_ == o.x_ && y_ == o.y_;
    }

private:
    bool identity_ = true;
    FieldElement x_, y_;
};

/// The curve equation alone: enough to run the group law. Used directly by
/// the parameter search, where the group order is not yet known.
struct WeierstrassEq {
    std::shared_ptr<const PrimeField> field;
    FieldElement a, b;

    WeierstrassEq(std::shared_ptr<const PrimeField> f, const BigInt& a_raw, const BigInt& b_raw)
        : field(std::move(f)), a(field->element(a_raw)), b(field->element(b_raw)) {}

    /// 4a^3 + 27b^2; zero iff the curve is singular.
    FieldElement singularity_term() const;
    bool non_singular() const { return !singularity_term().is_zero(); }
    const BigInt& p() const { return field->modulus(); }
};

struct Provenance {
    std::string seed;
    uint64_t b_index = 0;
    uint64_t g_index = 0;
};

/// Exact integer companions of the curve: trace, CM discriminant, twist
/// order, and optional externally published evidence. For the flagship
/// curve these are the publication's printed decimals; for everything else
/// they are computed at registration from (p, N).
struct PublishedFacts {
    BigInt trace;
    BigInt cm_discriminant;
    BigInt twist_order;
    std::optional<BigInt> twist_factor;
    std::optional<std::pair<int, int>> expected_twist_factor_bits;
    std::optional<size_t> claimed_p_bits;
    std::optional<size_t> claimed_n_bits;
};

/// Complete, validated domain parameters. Construction enforces:
/// non-singularity, G on curve and not the identity, cofactor >= 1, and
/// N*h inside the Hasse interval [p+1-2*sqrt(p), p+1+2*sqrt(p)].
class CurveParams {
public:
    CurveParams(std::string name, WeierstrassEq eq, Point generator, BigInt order,
                unsigned cofactor, std::optional<Provenance> provenance = std::nullopt,
                std::optional<PublishedFacts> published = std::nullopt);

    const std::string& name() const { return name_; }
    const WeierstrassEq& eq() const { return eq_; }
    const PrimeField& field() const { return *eq_.field; }
    std::shared_ptr<const PrimeField> field_ptr() const { return eq_.field; }
    const FieldElement& a() const { return eq_.a; }
    const FieldElement& b() const { return eq_.b; }
    const Point& generator() const { return g_; }
    const BigInt& order() const { return n_; }
    unsigned cofactor() const { return h_; }
    const std::optional<Provenance>& provenance() const { return provenance_; }
    const std::optional<PublishedFacts>& published() const { return published_; }

private:
    std::string name_;
    WeierstrassEq eq_;
    Point g_;
    BigInt n_;
    unsigned h_;
    std::optional<Provenance> provenance_;
    std::optional<PublishedFacts> published_;
};

/// Scalar held canonically in [0, N).
class Scalar {
public:
    Scalar(const BigInt& k, const CurveParams& c) : v_(k.mod(c.order())) {}
    static Scalar from_value(const BigInt& canonical) {
        Scalar s;
        s.v_ = canonical;
        return s;
    }
    const BigInt& value() const { return v_; }

private:
    Scalar() = default;
    BigInt v_;
};

bool is_on_curve(const Point& p, const WeierstrassEq& eq);
bool is_on_curve(const Point& p, const CurveParams& c);

/// Chord-tangent group sum. Inputs are validated against the curve equation.
Point point_add(const Point& p, const Point& q, const WeierstrassEq& eq);
Point point_add(const Point& p, const Point& q, const CurveParams& c);

Point point_negate(const Point& p);

/// [k]P by a Montgomery ladder over a fixed bit schedule (the order's bit
/// length), with ladder targets chosen by secret-indexed selection rather
/// than branches. P is validated on entry.
Point scalar_mul(const Scalar& k, const Point& p, const CurveParams& c);

/// SEC1-style encoding: 0x04||X||Y, or 0x02/0x03||X with the prefix giving
/// Y's parity. Coordinates are fixed-width big-endian, ceil(bits(p)/8)
/// octets. The identity is not encodable.
std::vector<uint8_t> point_encode(const Point& p, const CurveParams& c, bool compressed);
Point point_decode(std::span<const uint8_t> bytes, const CurveParams& c);

/// 1728 * 4a^3 / (4a^3 + 27b^2). Throws std::domain_error on a singular curve.
FieldElement j_invariant(const WeierstrassEq& eq);
FieldElement j_invariant(const CurveParams& c);

/// Jacobian internals, exposed for the point-counting and search loops that
/// need inversion-free chains. (X:Y:Z) maps to (X/Z^2, Y/Z^3); Z = 0 is the
/// identity.
struct JacobianPoint {
    FieldElement x, y, z;
    bool is_identity() const { return z.is_zero(); }
};

JacobianPoint jac_identity(const WeierstrassEq& eq);
JacobianPoint jac_from_affine(const Point& p, const WeierstrassEq& eq);
Point jac_to_affine(const JacobianPoint& p, const WeierstrassEq& eq);
JacobianPoint jac_double(const JacobianPoint& p, const WeierstrassEq& eq);
JacobianPoint jac_add(const JacobianPoint& p, const JacobianPoint& q, const WeierstrassEq& eq);
/// q affine (identity allowed); the cheap mixed form for long add chains.
JacobianPoint jac_add_affine(const JacobianPoint& p, const Point& q, const WeierstrassEq& eq);
/// Double-and-add; variable time, for public inputs only.
JacobianPoint jac_scalar_mul_vartime(const BigInt& k, const Point& p, const WeierstrassEq& eq);

}  // namespace frog

#include "frog/curve.hpp"

#include <array>
#include <stdexcept>

namespace frog {

FieldElement WeierstrassEq::singularity_term() const {
    FieldElement four = field->element(BigInt{4ul});
    FieldElement twenty_seven = field->element(BigInt{27ul});
    return four * a * a * a + twenty_seven * b * b;
}

CurveParams::CurveParams(std::string name, WeierstrassEq eq, Point generator, BigInt order,
                         unsigned cofactor, std::optional<Provenance> provenance,
                         std::optional<PublishedFacts> published)
    : name_(std::move(name)),
      eq_(std::move(eq)),
      g_(std::move(generator)),
      n_(std::move(order)),
      h_(cofactor),
      provenance_(std::move(provenance)),
      published_(std::move(published)) {
    if (!eq_.non_singular()) throw std::invalid_argument("CurveParams: singular curve");
    if (h_ < 1) throw std::invalid_argument("CurveParams: cofactor must be >= 1");
    if (!(n_ > BigInt{1ul})) throw std::invalid_argument("CurveParams: order must exceed 1");
    if (g_.is_identity() || !is_on_curve(g_, eq_)) {
        throw std::invalid_argument("CurveParams: generator not a finite curve point");
    }
    const BigInt& p = eq_.p();
    BigInt total = n_ * BigInt{static_cast<unsigned long>(h_)};
    BigInt width = (BigInt{4ul} * p).sqrt_floor();
    BigInt lo = p + BigInt{1ul} - width;
    BigInt hi = p + BigInt{1ul} + width;
    if (total < lo || total > hi) {
        throw std::invalid_argument("CurveParams: N*h violates the Hasse bound");
    }
}

bool is_on_curve(const Point& pt, const WeierstrassEq& eq) {
    if (pt.is_identity()) return true;
    if (!(pt.x().field() == *eq.field) || !(pt.y().field() == *eq.field)) {
        throw FieldMismatchError{};
    }
    FieldElement lhs = pt.y().square();
    FieldElement rhs = pt.x().square() * pt.x() + eq.a * pt.x() + eq.b;
    return lhs == rhs;
}

bool is_on_curve(const Point& pt, const CurveParams& c) { return is_on_curve(pt, c.eq()); }

JacobianPoint jac_identity(const WeierstrassEq& eq) {
    return {eq.field->one(), eq.field->one(), eq.field->zero()};
}

JacobianPoint jac_from_affine(const Point& p, const WeierstrassEq& eq) {
    if (p.is_identity()) return jac_identity(eq);
    return {p.x(), p.y(), eq.field->one()};
}

Point jac_to_affine(const JacobianPoint& p, const WeierstrassEq& eq) {
    if (p.is_identity()) return Point::identity();
    FieldElement zinv = p.z.invert();
    FieldElement zinv2 = zinv.square();
    return Point::affine(p.x * zinv2, p.y * zinv2 * zinv);
}

JacobianPoint jac_double(const JacobianPoint& p, const WeierstrassEq& eq) {
    if (p.is_identity() || p.y.is_zero()) return jac_identity(eq);
    // S = 4XY^2, M = 3X^2 + aZ^4
    FieldElement y2 = p.y.square();
    FieldElement s = p.x * y2;
    s = s + s;
    s = s + s;
    FieldElement x2 = p.x.square();
    FieldElement z2 = p.z.square();
    FieldElement m = x2 + x2 + x2 + eq.a * z2.square();
    FieldElement x3 = m.square() - (s + s);
    FieldElement y4 = y2.square();
    FieldElement y4_8 = y4 + y4;
    y4_8 = y4_8 + y4_8;
    y4_8 = y4_8 + y4_8;
    FieldElement y3 = m * (s - x3) - y4_8;
    FieldElement z3 = (p.y + p.y) * p.z;
    return {x3, y3, z3};
}

JacobianPoint jac_add(const JacobianPoint& p, const JacobianPoint& q, const WeierstrassEq& eq) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    FieldElement z1z1 = p.z.square();
    FieldElement z2z2 = q.z.square();
    FieldElement u1 = p.x * z2z2;
    FieldElement u2 = q.x * z1z1;
    FieldElement s1 = p.y * z2z2 * q.z;
    FieldElement s2 = q.y * z1z1 * p.z;
    if (u1 == u2) {
        if (!(s1 == s2)) return jac_identity(eq);
        return jac_double(p, eq);
    }
    FieldElement h = u2 - u1;
    FieldElement r = s2 - s1;
    FieldElement h2 = h.square();
    FieldElement h3 = h2 * h;
    FieldElement u1h2 = u1 * h2;
    FieldElement x3 = r.square() - h3 - (u1h2 + u1h2);
    FieldElement y3 = r * (u1h2 - x3) - s1 * h3;
    FieldElement z3 = p.z * q.z * h;
    return {x3, y3, z3};
}

JacobianPoint jac_add_affine(const JacobianPoint& p, const Point& q, const WeierstrassEq& eq) {
    if (q.is_identity()) return p;
    if (p.is_identity()) return jac_from_affine(q, eq);
    FieldElement z1z1 = p.z.square();
    FieldElement u2 = q.x() * z1z1;
    FieldElement s2 = q.y() * z1z1 * p.z;
    if (p.x == u2) {
        if (!(p.y == s2)) return jac_identity(eq);
        return jac_double(p, eq);
    }
    FieldElement h = u2 - p.x;
    FieldElement r = s2 - p.y;
    FieldElement h2 = h.square();
    FieldElement h3 = h2 * h;
    FieldElement u1h2 = p.x * h2;
    FieldElement x3 = r.square() - h3 - (u1h2 + u1h2);
    FieldElement y3 = r * (u1h2 - x3) - p.y * h3;
    FieldElement z3 = p.z * h;
    return {x3, y3, z3};
}

Point point_add(const Point& p, const Point& q, const WeierstrassEq& eq) {
    if (!is_on_curve(p, eq) || !is_on_curve(q, eq)) {
        throw std::invalid_argument("point_add: input off curve");
    }
    return jac_to_affine(jac_add(jac_from_affine(p, eq), jac_from_affine(q, eq), eq), eq);
}

Point point_add(const Point& p, const Point& q, const CurveParams& c) {
    return point_add(p, q, c.eq());
}

Point point_negate(const Point& p) {
    if (p.is_identity()) return p;
    return Point::affine(p.x(), -p.y());
}

Point scalar_mul(const Scalar& k, const Point& p, const CurveParams& c) {
    const WeierstrassEq& eq = c.eq();
    if (!is_on_curve(p, eq)) throw std::invalid_argument("scalar_mul: input off curve");
    if (p.is_identity()) return Point::identity();

    // Ladder with a fixed schedule: one add and one double per order bit,
    // results routed by secret index instead of branching on key bits.
    std::array<JacobianPoint, 2> r = {jac_identity(eq), jac_from_affine(p, eq)};
    const size_t bits = c.order().bit_length();
    const BigInt& scalar = k.value();
    for (size_t i = bits; i-- > 0;) {
        const size_t bit = scalar.test_bit(i) ? 1 : 0;
        JacobianPoint sum = jac_add(r[0], r[1], eq);
        JacobianPoint dbl = jac_double(r[bit], eq);
        r[1 - bit] = std::move(sum);
        r[bit] = std::move(dbl);
    }
    return jac_to_affine(r[0], eq);
}

JacobianPoint jac_scalar_mul_vartime(const BigInt& k, const Point& p, const WeierstrassEq& eq) {
    if (k.sign() < 0) throw std::invalid_argument("jac_scalar_mul_vartime: negative scalar");
    JacobianPoint acc = jac_identity(eq);
    if (p.is_identity() || k.is_zero()) return acc;
    for (size_t i = k.bit_length(); i-- > 0;) {
        acc = jac_double(acc, eq);
        if (k.test_bit(i)) acc = jac_add_affine(acc, p, eq);
    }
    return acc;
}

std::vector<uint8_t> point_encode(const Point& p, const CurveParams& c, bool compressed) {
    if (p.is_identity()) throw std::invalid_argument("point_encode: identity has no encoding");
    if (!is_on_curve(p, c.eq())) throw std::invalid_argument("point_encode: point off curve");
    const size_t fw = c.field().byte_length();
    std::vector<uint8_t> out;
    if (compressed) {
        out.reserve(1 + fw);
        out.push_back(p.y().value().is_even() ? 0x02 : 0x03);
        auto xb = p.x().to_bytes();
        out.insert(out.end(), xb.begin(), xb.end());
    } else {
        out.reserve(1 + 2 * fw);
        out.push_back(0x04);
        auto xb = p.x().to_bytes();
        auto yb = p.y().to_bytes();
        out.insert(out.end(), xb.begin(), xb.end());
        out.insert(out.end(), yb.begin(), yb.end());
    }
    return out;
}

Point point_decode(std::span<const uint8_t> bytes, const CurveParams& c) {
    const size_t fw = c.field().byte_length();
    if (bytes.empty()) throw std::invalid_argument("point_decode: empty input");
    const uint8_t tag = bytes[0];
    if (tag == 0x04) {
        if (bytes.size() != 1 + 2 * fw) throw std::invalid_argument("point_decode: bad length");
        BigInt x = BigInt::from_bytes_be(bytes.subspan(1, fw));
        BigInt y = BigInt::from_bytes_be(bytes.subspan(1 + fw, fw));
        if (x >= c.field().modulus() || y >= c.field().modulus()) {
            throw std::invalid_argument("point_decode: coordinate out of range");
        }
        Point p = Point::affine(c.field().element(x), c.field().element(y));
        if (!is_on_curve(p, c.eq())) throw std::invalid_argument("point_decode: point off curve");
        return p;
    }
    if (tag == 0x02 || tag == 0x03) {
        if (bytes.size() != 1 + fw) throw std::invalid_argument("point_decode: bad length");
        BigInt x = BigInt::from_bytes_be(bytes.subspan(1, fw));
        if (x >= c.field().modulus()) {
            throw std::invalid_argument("point_decode: coordinate out of range");
        }
        FieldElement xe = c.field().element(x);
        FieldElement rhs = xe.square() * xe + c.a() * xe + c.b();
        auto roots = rhs.sqrt();
        if (!roots) throw std::invalid_argument("point_decode: x has no curve point");
        const bool want_odd = tag == 0x03;
        const FieldElement& chosen =
            roots->first.value().is_odd() == want_odd ? roots->first : roots->second;
        if (chosen.value().is_odd() != want_odd) {
            // y = 0: both roots even, so an odd-parity prefix cannot match.
            throw std::invalid_argument("point_decode: parity bit inconsistent with curve point");
        }
        return Point::affine(xe, chosen);
    }
    throw std::invalid_argument("point_decode: unknown prefix octet");
}

FieldElement j_invariant(const WeierstrassEq& eq) {
    FieldElement denom = eq.singularity_term();
    if (denom.is_zero()) throw std::domain_error("j_invariant: singular curve");
    FieldElement four = eq.field->element(BigInt{4ul});
    FieldElement a3_4 = four * eq.a * eq.a * eq.a;
    return eq.field->element(BigInt{1728ul}) * a3_4 * denom.invert();
}

FieldElement j_invariant(const CurveParams& c) { return j_invariant(c.eq()); }

}  // namespace frog

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include "frog/curve.hpp"
#include "frog/registry.hpp"
#include "frog/rng.hpp"
#include "oracles.hpp"

using namespace frog;

namespace {

const CurveParams& frogc() { return registry_get("eccfrog522pp"); }

Point oracle_to_point(const oracle::AffinePt& p, const CurveParams& c) {
    if (p.inf) return Point::identity();
    return Point::affine(c.field().element(p.x), c.field().element(p.y));
}

BigInt bn_to_bigint(const BIGNUM* bn) {
    char* hex = BN_bn2hex(bn);
    BigInt v{std::string("0x") + hex};
    OPENSSL_free(hex);
    return v;
}

}  // namespace

TEST_CASE("registry parameters match the platform crypto library bit for bit") {
    struct Entry {
        const char* ours;
        int nid;
    };
    const Entry entries[] = {
        {"secp256k1", NID_secp256k1},
        {"p256", NID_X9_62_prime256v1},
        {"p384", NID_secp384r1},
        {"p521", NID_secp521r1},
    };
    for (const auto& e : entries) {
        CAPTURE(e.ours);
        const CurveParams& c = registry_get(e.ours);
        EC_GROUP* grp = EC_GROUP_new_by_curve_name(e.nid);
        REQUIRE(grp != nullptr);
        BIGNUM *p = BN_new(), *a = BN_new(), *b = BN_new(), *x = BN_new(), *y = BN_new();
        REQUIRE(EC_GROUP_get_curve(grp, p, a, b, nullptr) == 1);
        CHECK(bn_to_bigint(p) == c.field().modulus());
        CHECK(bn_to_bigint(a) == c.a().value());
        CHECK(bn_to_bigint(b) == c.b().value());
        CHECK(bn_to_bigint(EC_GROUP_get0_order(grp)) == c.order());
        CHECK(bn_to_bigint(EC_GROUP_get0_cofactor(grp)) ==
              BigInt{static_cast<unsigned long>(c.cofactor())});
        REQUIRE(EC_POINT_get_affine_coordinates(grp, EC_GROUP_get0_generator(grp), x, y, nullptr) ==
                1);
        CHECK(bn_to_bigint(x) == c.generator().x().value());
        CHECK(bn_to_bigint(y) == c.generator().y().value());
        BN_free(p);
        BN_free(a);
        BN_free(b);
        BN_free(x);
        BN_free(y);
        EC_GROUP_free(grp);
    }
}

TEST_CASE("registry names and lookup") {
    CHECK(registry_names().size() == 5);
    CHECK(registry_get("eccfrog522pp").cofactor() == 1);
    CHECK(registry_get("eccfrog522pp").provenance()->b_index == 1294798);
    CHECK(registry_get("eccfrog522pp").provenance()->g_index == 0);
    CHECK_THROWS_AS(registry_get("nosuchcurve"), UnknownCurveError);
    // The source publication's Eq. 4 prints secp256k1 with b = -9; the
    // registry follows the public standard.
    CHECK(registry_get("secp256k1").b().value() == BigInt{7ul});
}

TEST_CASE("published base point is on the curve and off-curve inputs are caught") {
    const CurveParams& c = frogc();
    CHECK(is_on_curve(c.generator(), c));
    CHECK(is_on_curve(Point::identity(), c));
    Point nudged = Point::affine(c.generator().x(), c.generator().y() + c.field().one());
    CHECK_FALSE(is_on_curve(nudged, c));
    CHECK_THROWS_AS(point_add(nudged, c.generator(), c), std::invalid_argument);
    CHECK_THROWS_AS(scalar_mul(Scalar{BigInt{2ul}, c}, nudged, c), std::invalid_argument);
}

TEST_CASE("point_add basics") {
    const CurveParams& c = frogc();
    const Point& g = c.generator();
    CHECK(point_add(g, Point::identity(), c) == g);
    CHECK(point_add(Point::identity(), g, c) == g);
    CHECK(point_add(g, point_negate(g), c) == Point::identity());
    Point doubled = point_add(g, g, c);
    CHECK(is_on_curve(doubled, c));
    CHECK_FALSE(doubled == g);
}

TEST_CASE("group order: [N]G is the identity on every registry curve") {
    for (const auto& name : registry_names()) {
        CAPTURE(name);
        const CurveParams& c = registry_get(name);
        CHECK(jac_to_affine(jac_scalar_mul_vartime(c.order(), c.generator(), c.eq()), c.eq()) ==
              Point::identity());
        // Constant-schedule path sees the same thing via a non-canonical scalar.
        CHECK(scalar_mul(Scalar::from_value(c.order()), c.generator(), c) == Point::identity());
    }
}

TEST_CASE("scalar_mul fundamentals") {
    const CurveParams& c = frogc();
    const Point& g = c.generator();
    CHECK(scalar_mul(Scalar{BigInt{0ul}, c}, g, c) == Point::identity());
    CHECK(scalar_mul(Scalar{BigInt{1ul}, c}, g, c) == g);
    CHECK(scalar_mul(Scalar{BigInt{2ul}, c}, g, c) == point_add(g, g, c));
    CHECK(scalar_mul(Scalar{BigInt{2ul}, c}, Point::identity(), c) == Point::identity());
}

TEST_CASE("scalar_mul matches the naive oracle and is homomorphic") {
    SeededRng rng{99};
    for (const auto& name : registry_names()) {
        CAPTURE(name);
        const CurveParams& c = registry_get(name);
        const BigInt& p = c.field().modulus();
        const BigInt a = c.a().value();
        oracle::AffinePt og = oracle::pt(c.generator().x().value(), c.generator().y().value());
        for (int i = 0; i < 8; ++i) {
            BigInt k1 = rng.uniform_below(c.order());
            BigInt k2 = rng.uniform_below(c.order());
            Point r1 = scalar_mul(Scalar{k1, c}, c.generator(), c);
            CHECK(r1 == oracle_to_point(oracle::scalar_mul(k1, og, a, p), c));
            // homomorphism
            Point lhs = scalar_mul(Scalar{(k1 + k2).mod(c.order()), c}, c.generator(), c);
            Point rhs = point_add(r1, scalar_mul(Scalar{k2, c}, c.generator(), c), c);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("encoding round trips and fixed widths") {
    const CurveParams& c = frogc();
    SeededRng rng{17};
    CHECK(point_encode(c.generator(), c, false).size() == 133);
    CHECK(point_encode(c.generator(), c, true).size() == 67);
    for (int i = 0; i < 10; ++i) {
        Point pt = scalar_mul(Scalar{rng.uniform_nonzero_below(c.order()), c}, c.generator(), c);
        for (bool compressed : {false, true}) {
            auto bytes = point_encode(pt, c, compressed);
            CHECK(point_decode(bytes, c) == pt);
        }
        auto comp = point_encode(pt, c, true);
        CHECK(comp[0] == (pt.y().value().is_even() ? 0x02 : 0x03));
    }
}

TEST_CASE("decode rejects malformed input") {
    const CurveParams& c = frogc();
    auto good = point_encode(c.generator(), c, false);
    CHECK_THROWS_AS(point_encode(Point::identity(), c, false), std::invalid_argument);

    auto bad_prefix = good;
    bad_prefix[0] = 0x05;
    CHECK_THROWS_AS(point_decode(bad_prefix, c), std::invalid_argument);

    auto truncated = good;
    truncated.pop_back();
    CHECK_THROWS_AS(point_decode(truncated, c), std::invalid_argument);

    auto off_curve = good;
    off_curve.back() ^= 0x01;
    CHECK_THROWS_AS(point_decode(off_curve, c), std::invalid_argument);

    // compressed x with no curve point: find a non-residue rhs
    auto comp = point_encode(c.generator(), c, true);
    for (uint8_t delta = 1; delta < 40; ++delta) {
        auto probe = comp;
        probe.back() ^= delta;
        BigInt x = BigInt::from_bytes_be(std::span(probe).subspan(1));
        FieldElement xe = c.field().element(x);
        FieldElement rhs = xe.square() * xe + c.a() * xe + c.b();
        if (!rhs.is_square()) {
            CHECK_THROWS_AS(point_decode(probe, c), std::invalid_argument);
            break;
        }
    }
}

TEST_CASE("j-invariant formula endpoints") {
    auto field = std::make_shared<const PrimeField>(BigInt{97ul});
    WeierstrassEq a_zero{field, BigInt{0ul}, BigInt{1ul}};
    CHECK(j_invariant(a_zero).value().is_zero());
    WeierstrassEq b_zero{field, BigInt{1ul}, BigInt{0ul}};
    CHECK(j_invariant(b_zero).value() == BigInt{1728ul % 97ul});
    WeierstrassEq singular{field, BigInt{0ul}, BigInt{0ul}};
    CHECK_THROWS_AS(j_invariant(singular), std::domain_error);
    // the flagship value is recorded; just pin determinism here
    CHECK(j_invariant(frogc()) == j_invariant(frogc()));
}

TEST_CASE("curve params validation rejects bad inputs") {
    auto field = std::make_shared<const PrimeField>(BigInt{97ul});
    WeierstrassEq singular{field, BigInt{0ul}, BigInt{0ul}};
    Point some = Point::affine(field->element(BigInt{0ul}), field->element(BigInt{0ul}));
    CHECK_THROWS_AS(CurveParams("x", singular, some, BigInt{97ul}, 1), std::invalid_argument);

    WeierstrassEq ok{field, BigInt{2ul}, BigInt{3ul}};
    CHECK_THROWS_AS(CurveParams("x", ok, Point::identity(), BigInt{97ul}, 1),
                    std::invalid_argument);
}

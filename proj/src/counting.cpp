#include "frog/counting.hpp"

#include <cmath>
#include <numeric>
#include <unordered_map>

#include "frog/primality.hpp"

namespace frog {

namespace {

// Montgomery batch normalization; inputs must be finite points.
std::vector<Point> batch_to_affine(const std::vector<JacobianPoint>& pts,
                                   const WeierstrassEq& eq) {
    const size_t n = pts.size();
    std::vector<Point> out(n);
    if (n == 0) return out;
    std::vector<FieldElement> prefix(n);
    prefix[0] = pts[0].z;
    for (size_t i = 1; i < n; ++i) prefix[i] = prefix[i - 1] * pts[i].z;
    FieldElement acc = prefix[n - 1].invert();
    for (size_t i = n; i-- > 0;) {
        FieldElement zinv = i == 0 ? acc : acc * prefix[i - 1];
        FieldElement zinv2 = zinv.square();
        out[i] = Point::affine(pts[i].x * zinv2, pts[i].y * zinv2 * zinv);
        acc = acc * pts[i].z;
    }
    return out;
}

uint64_t point_key(const Point& p) {
    // x < 2^48 here, so (x, parity of y) packs into one word and uniquely
    // identifies a finite point.
    uint64_t x = p.x().value().to_ulong();
    uint64_t parity = p.y().value().is_odd() ? 1 : 0;
    return (x << 1) | parity;
}

uint64_t negated_key(const Point& p) {
    uint64_t x = p.x().value().to_ulong();
    uint64_t parity = p.y().value().is_zero() ? 0 : (p.y().value().is_odd() ? 0 : 1);
    return (x << 1) | parity;
}

// Pollard-Brent rho factorization for the annihilator multiples (< 2^50).
uint64_t pollard_brent(uint64_t n, uint64_t c0) {
    auto f = [n, c0](uint64_t x) { return (kernels::mulmod_u64(x, x, n) + c0) % n; };
    uint64_t x = 2, y = 2, d = 1;
    uint64_t q = 1;
    int iter = 0;
    while (d == 1) {
        x = f(x);
        y = f(f(y));
        uint64_t diff = x > y ? x - y : y - x;
        if (diff == 0) return 0;
        q = kernels::mulmod_u64(q, diff, n);
        if (++iter % 64 == 0) {
            d = std::gcd(q, n);
            if (d == n) return 0;
        }
    }
    return d;
}

void factor_u64(uint64_t n, std::vector<uint64_t>& primes_out) {
    if (n <= 1) return;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                       31ull, 37ull, 41ull, 43ull, 47ull}) {
        while (n % q == 0) {
            primes_out.push_back(q);
            n /= q;
        }
    }
    if (n == 1) return;
    if (baillie_psw(BigInt{static_cast<unsigned long>(n)})) {
        primes_out.push_back(n);
        return;
    }
    for (uint64_t q = 53; q * q <= n && q < 100000; q += 2) {
        while (n % q == 0) {
            primes_out.push_back(q);
            n /= q;
        }
        if (n == 1) return;
        if (baillie_psw(BigInt{static_cast<unsigned long>(n)})) {
            primes_out.push_back(n);
            return;
        }
    }
    uint64_t d = 0;
    for (uint64_t c = 1; d == 0 || d == n; ++c) d = pollard_brent(n, c);
    factor_u64(d, primes_out);
    factor_u64(n / d, primes_out);
}

}  // namespace

BigInt count_points_enumeration(const WeierstrassEq& eq, kernels::Exec mode) {
    const BigInt& p = eq.p();
    if (p.bit_length() > 26) {
        throw std::invalid_argument("count_points_enumeration: field too large");
    }
    uint64_t pu = p.to_ulong();
    uint64_t au = eq.a.value().to_ulong();
    uint64_t bu = eq.b.value().to_ulong();
    return BigInt{static_cast<unsigned long>(kernels::curve_point_count_enum(pu, au, bu, mode))};
}

Point random_point(const WeierstrassEq& eq, Rng& rng) {
    for (;;) {
        FieldElement x = eq.field->element(rng.uniform_below(eq.p()));
        FieldElement rhs = x.square() * x + eq.a * x + eq.b;
        auto roots = rhs.sqrt();
        if (!roots) continue;
        uint8_t bit;
        rng.fill({&bit, 1});
        return Point::affine(x, (bit & 1) ? roots->second : roots->first);
    }
}

BigInt point_order_brute_force(const Point& p, const WeierstrassEq& eq, uint64_t cap) {
    if (p.is_identity()) return BigInt{1ul};
    if (!is_on_curve(p, eq)) throw std::invalid_argument("point_order_brute_force: off curve");
    JacobianPoint acc = jac_from_affine(p, eq);
    uint64_t k = 1;
    while (!acc.is_identity()) {
        acc = jac_add_affine(acc, p, eq);
        if (++k > cap) throw std::runtime_error("point_order_brute_force: cap exceeded");
    }
    return BigInt{static_cast<unsigned long>(k)};
}

std::optional<BigInt> bsgs_find_annihilator(const Point& p, const WeierstrassEq& eq,
                                            const BigInt& lo, const BigInt& width) {
    if (p.is_identity()) return lo;
    const uint64_t w = width.to_ulong();
    uint64_t s = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(w))));
    if (s == 0) s = 1;

    // Baby steps: [lo]P, [lo+1]P, ..., [lo+s-1]P.
    JacobianPoint base = jac_scalar_mul_vartime(lo, p, eq);
    std::vector<JacobianPoint> babies;
    babies.reserve(s);
    JacobianPoint cur = base;
    for (uint64_t u = 0; u < s; ++u) {
        if (cur.is_identity()) return lo + BigInt{static_cast<unsigned long>(u)};
        babies.push_back(cur);
        cur = jac_add_affine(cur, p, eq);
    }
    std::vector<Point> baby_affine = batch_to_affine(babies, eq);
    std::unordered_map<uint64_t, uint64_t> table;
    table.reserve(s * 2);
    for (uint64_t u = 0; u < s; ++u) table.emplace(point_key(baby_affine[u]), u);

    // Giant steps: test [lo+u+v*s]P = O via baby == -[v*s]P.
    Point step = jac_to_affine(jac_scalar_mul_vartime(BigInt{static_cast<unsigned long>(s)}, p, eq), eq);
    if (step.is_identity()) return std::nullopt;  // handled by the baby scan above
    JacobianPoint giant = jac_from_affine(step, eq);
    const uint64_t v_max = w / s + 2;
    for (uint64_t v = 1; v <= v_max; ++v) {
        if (giant.is_identity()) {
            giant = jac_add_affine(giant, step, eq);
            continue;
        }
        Point g = jac_to_affine(giant, eq);
        auto it = table.find(negated_key(g));
        if (it != table.end()) {
            BigInt m = lo + BigInt{static_cast<unsigned long>(it->second)} +
                       BigInt{static_cast<unsigned long>(v)} * BigInt{static_cast<unsigned long>(s)};
            if (jac_scalar_mul_vartime(m, p, eq).is_identity()) return m;
        }
        giant = jac_add_affine(giant, step, eq);
    }
    return std::nullopt;
}

BigInt point_order_from_multiple(const Point& p, const WeierstrassEq& eq, const BigInt& m) {
    if (p.is_identity()) return BigInt{1ul};
    if (!jac_scalar_mul_vartime(m, p, eq).is_identity()) {
        throw std::invalid_argument("point_order_from_multiple: m does not annihilate P");
    }
    std::vector<uint64_t> primes;
    factor_u64(m.to_ulong(), primes);
    BigInt ord = m;
    for (uint64_t q : primes) {
        BigInt candidate = ord.divexact_ui(q);
        if (jac_scalar_mul_vartime(candidate, p, eq).is_identity()) ord = candidate;
    }
    return ord;
}

BigInt count_points_bsgs(const WeierstrassEq& eq, Rng& rng) {
    const BigInt& p = eq.p();
    const BigInt one{1ul};
    BigInt w = (BigInt{4ul} * p).sqrt_floor();
    BigInt lo = p + one - w;
    BigInt width = w + w + one;

    auto unique_multiple = [&](const BigInt& l) -> std::optional<BigInt> {
        BigInt first = ((lo + l - one) / l) * l;
        if (first > lo + width - one) return std::nullopt;
        if (first + l > lo + width - one) return first;
        return std::nullopt;  // several candidates remain
    };

    BigInt l_curve{1ul};
    for (int tries = 0; tries < 24; ++tries) {
        Point pt = random_point(eq, rng);
        auto m = bsgs_find_annihilator(pt, eq, lo, width);
        if (!m) throw std::runtime_error("count_points_bsgs: annihilator missing from Hasse window");
        l_curve = lcm(l_curve, point_order_from_multiple(pt, eq, *m));
        if (auto n = unique_multiple(l_curve)) return *n;
    }

    // Point orders alone leave several candidates; bring in the quadratic
    // twist, whose order is tied to ours by #E + #E' = 2p + 2.
    BigInt u{2ul};
    while (jacobi(u, p) != -1) u += one;
    FieldElement uf = eq.field->element(u);
    WeierstrassEq twist{eq.field, (eq.a * uf * uf).value(), (eq.b * uf * uf * uf).value()};
    const BigInt two_p_plus_2 = (p + one) * BigInt{2ul};

    BigInt l_twist{1ul};
    for (int tries = 0; tries < 200; ++tries) {
        Point pt = random_point(twist, rng);
        auto m = bsgs_find_annihilator(pt, twist, lo, width);
        if (!m) throw std::runtime_error("count_points_bsgs: twist annihilator missing");
        l_twist = lcm(l_twist, point_order_from_multiple(pt, twist, *m));

        std::optional<BigInt> hit;
        int matches = 0;
        for (BigInt n = ((lo + l_curve - one) / l_curve) * l_curve; n <= lo + width - one;
             n += l_curve) {
            if ((two_p_plus_2 - n).mod(l_twist).is_zero()) {
                ++matches;
                hit = n;
            }
        }
        if (matches == 1) return *hit;

        Point pt2 = random_point(eq, rng);
        auto m2 = bsgs_find_annihilator(pt2, eq, lo, width);
        if (m2) l_curve = lcm(l_curve, point_order_from_multiple(pt2, eq, *m2));
    }
    throw std::runtime_error("count_points_bsgs: order not pinned (exhausted attempts)");
}

BigInt count_points(const WeierstrassEq& eq, Rng* rng, kernels::Exec mode) {
    const BigInt& p = eq.p();
    if (p.bit_length() > 48) throw std::invalid_argument("count_points: modulus exceeds 2^48");

    BigInt n;
    if (p.bit_length() <= 20) {
        n = count_points_enumeration(eq, mode);
    } else {
        std::optional<SeededRng> fallback;
        if (!rng) {
            uint64_t seed = p.mod_ui(0xffffffffffffffffull) ^ eq.b.value().mod_ui(0x9e3779b97f4a7c15ull);
            fallback.emplace(seed);
        }
        n = count_points_bsgs(eq, rng ? *rng : *fallback);
    }

    BigInt w = (BigInt{4ul} * p).sqrt_floor();
    const BigInt one{1ul};
    if (n < p + one - w || n > p + one + w) {
        throw std::logic_error("count_points: result violates the Hasse bound");
    }
    return n;
}

}  // namespace frog

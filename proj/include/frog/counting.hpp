#pragma once

#include <optional>

#include "frog/curve.hpp"
#include "frog/kernels.hpp"
#include "frog/rng.hpp"

namespace frog {

/// Exact #E(F_p) including the identity. Dispatches on field size:
/// quadratic-character enumeration below 2^20, otherwise baby-step
/// giant-step order-pinning over the Hasse interval (Mestre-style, with a
/// quadratic-twist fallback when point orders alone cannot disambiguate).
/// Requires p < 2^48. The result is asserted to lie in the Hasse interval.
BigInt count_points(const WeierstrassEq& eq, Rng* rng = nullptr,
                    kernels::Exec mode = kernels::Exec::Parallel);

/// Enumeration path only (p < 2^26); exposed for cross-oracle tests.
BigInt count_points_enumeration(const WeierstrassEq& eq,
                                kernels::Exec mode = kernels::Exec::Parallel);

/// BSGS/Mestre path only; exposed for cross-oracle tests.
BigInt count_points_bsgs(const WeierstrassEq& eq, Rng& rng);

/// Uniform-ish random finite point: random x until x^3+ax+b is a residue,
/// root sign chosen by one rng bit.
Point random_point(const WeierstrassEq& eq, Rng& rng);

/// ord(P) by walking P, 2P, 3P, ... until the identity. Throws if the walk
/// exceeds `cap` steps.
BigInt point_order_brute_force(const Point& p, const WeierstrassEq& eq, uint64_t cap);

/// Smallest m in [lo, lo+width) with [m]P = O, or nullopt.
std::optional<BigInt> bsgs_find_annihilator(const Point& p, const WeierstrassEq& eq,
                                            const BigInt& lo, const BigInt& width);

/// Exact order of P given any multiple m of ord(P).
BigInt point_order_from_multiple(const Point& p, const WeierstrassEq& eq, const BigInt& m);

}  // namespace frog

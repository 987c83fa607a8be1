#pragma once

#include <map>
#include <string>
#include <vector>

#include "frog/curve.hpp"
#include "frog/derivation.hpp"

namespace frog {

enum class CheckStatus { Passed, Failed, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Failed;
    /// Non-empty whenever the check did not pass; may carry warnings otherwise.
    std::string detail;
    /// label -> decimal string, merged into the facts CSV.
    std::map<std::string, std::string> computed;

    bool passed() const { return status == CheckStatus::Passed; }
};

struct TwistEvidence {
    BigInt twist_order;
    std::optional<BigInt> claimed_factor;
    /// With claimed_factor: claimed_factor * cofactor must equal twist_order.
    std::optional<BigInt> cofactor;
    /// Enforced bit-length window for the large prime factor; absent means
    /// the check runs in report-only mode.
    std::optional<std::pair<int, int>> expected_factor_bits;
};

struct VerificationOptions {
    int anti_mov_max_k = 200;
    uint32_t cm_bound = 100000;
    uint32_t twist_trial_bound = 1000000;
    int mr_rounds = 64;
};

struct VerificationReport {
    std::string curve;
    std::vector<CheckResult> checks;
    /// True iff no check failed; skipped checks are recorded, never counted
    /// as passes.
    bool overall = false;
    /// Tool version plus the resolved derivation variant.
    std::string environment;
    /// Parameter-level rows for the facts CSV (p, a, b, gx, gy, n, ...).
    std::map<std::string, std::string> facts;

    const CheckResult* find(std::string_view name) const;
};

/// Exact integer identities tying the published companions to (p, N):
/// t = p+1-N, D = t^2-4p, twist = 2(p+1)-N, t^2 <= 4p, h = 1.
std::vector<CheckResult> check_consistency(const CurveParams& c, const PublishedFacts& published);

/// p^k mod N != 1 for 1 <= k <= k_max; k_max = 0 passes vacuously with a
/// warning. Records the first failing k when there is one.
CheckResult check_anti_mov(const CurveParams& c, int k_max = 200);

/// No prime q <= bound with q^2 | |D|. Records every small prime factor of
/// |D| and its multiplicity.
CheckResult check_cm_squarefree(const CurveParams& c, uint32_t bound = 100000);

/// Twist-order factor evidence. A claimed factor is verified (divides,
/// probable prime, bit length); otherwise a candidate is derived by
/// stripping primes < trial_bound. Throws std::invalid_argument on
/// inconsistent evidence.
CheckResult check_twist(const CurveParams& c, const TwistEvidence& evidence,
                        uint32_t trial_bound = 1000000, int mr_rounds = 64);

/// G on curve, not the identity, and [N]G = O.
CheckResult check_base_point(const CurveParams& c);

/// Primality of p and N (Baillie-PSW + MR rounds), cofactor 1, and computed
/// vs claimed bit lengths (mismatches are warnings, not failures).
std::vector<CheckResult> check_primes(const CurveParams& c, int mr_rounds = 64);

/// The full battery in fixed order: derivation reproduction, j-invariant,
/// primality, base point, consistency, anti-MOV, CM sanity, twist.
VerificationReport run_full_verification(const CurveParams& c,
                                         const VerificationOptions& opts = {});

/// Sorted `key,value` rows, decimal integers only; byte-identical for
/// identical reports.
void emit_facts_csv(const VerificationReport& report, const std::string& path);
std::string facts_csv_string(const VerificationReport& report);

std::string render_report(const VerificationReport& report);

extern const char* const kToolVersion;

}  // namespace frog

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frog/counting.hpp"
#include "frog/curve.hpp"
#include "frog/field.hpp"

namespace frog {

/// The byte-level choices the source publication leaves open. The shipped
/// defaults are the variant resolved empirically against the published
/// constants; resolve_encoding() re-derives that resolution from scratch.
enum class IndexEncoding { AsciiDecimal, U64BigEndian, U64LittleEndian };
enum class YSelection { Even, Odd };

struct DerivationConfig {
    std::string seed = "ECCFrog522PP|v1";
    IndexEncoding index_encoding = IndexEncoding::AsciiDecimal;
    DigestEndian digest_endian = DigestEndian::Big;
    YSelection y_rule = YSelection::Even;
    std::string b_tag = "b";
    std::string g_tag = "G";
    static constexpr size_t kDigestLen = 64;

    /// seed | "|" | tag | "|" | encoded index
    std::vector<uint8_t> message(const std::string& tag, uint64_t index) const;
    std::string describe() const;
    bool operator==(const DerivationConfig&) const = default;
};

/// All candidate variants: both printed seed casings x index encodings x
/// digest endianness.
std::vector<DerivationConfig> default_config_space();
std::vector<DerivationConfig> config_space_for_seeds(std::span<const std::string> seeds);

/// b = (BLAKE3_64(seed|b|i) mod (p-3)) + 2, in [2, p-2].
BigInt derive_b_candidate(const DerivationConfig& cfg, uint64_t i, const BigInt& p);

/// Gx = BLAKE3_64(seed|G|j) mod p.
BigInt derive_gx_candidate(const DerivationConfig& cfg, uint64_t j, const BigInt& p);

struct ResolutionResult {
    enum class Status { Resolved, Unresolved, Ambiguous };
    Status status = Status::Unresolved;
    std::optional<DerivationConfig> config;  // the unique match, when Resolved
    std::vector<DerivationConfig> matches;   // every match (>1 when Ambiguous)
};

/// Finds which variant reproduces the published b at index i. Never picks
/// silently: zero matches is a legitimate Unresolved outcome and several
/// matches are reported as Ambiguous.
ResolutionResult resolve_encoding(const BigInt& published_b, uint64_t i, const BigInt& p,
                                  std::span<const DerivationConfig> space);

struct SearchResult {
    uint64_t index = 0;
    BigInt value;
    uint64_t attempts = 0;
    bool accepted = false;
};

/// Plain-text derivation transcript, one `index,status,reason` line per
/// tested index.
class Transcript {
public:
    explicit Transcript(std::ostream* os) : os_(os) {}
    void line(uint64_t index, std::string_view status, std::string_view reason);

private:
    std::ostream* os_;
};

struct BasePointResult {
    Point point;
    uint64_t index = 0;
};

/// Walks j = 0, 1, 2, ...: derive Gx, require a quadratic residue on the
/// right-hand side, pick the root by cfg.y_rule, accept once [order]G is the
/// identity (order prime and cofactor 1 make that a full-order certificate).
BasePointResult find_base_point(const WeierstrassEq& eq, const BigInt& order,
                                const DerivationConfig& cfg, uint64_t cap = 10000,
                                Transcript* transcript = nullptr);
BasePointResult find_base_point(const CurveParams& c, const DerivationConfig& cfg,
                                uint64_t cap = 10000);

struct MiniGenOptions {
    uint64_t b_index_cap = 200000;
    uint64_t g_index_cap = 10000;
    kernels::Exec mode = kernels::Exec::Parallel;
    Transcript* transcript = nullptr;
};

/// The whole generation pipeline at desk scale: deterministic prime
/// (smallest p >= 2^(bits-1), p = 3 mod 4), first b index giving a
/// non-singular curve of prime order, then the base-point search. Exactly
/// reproducible for a fixed config, and the parallel scan returns the same
/// first-accepting index as the serial one.
CurveParams mini_generate(unsigned bits, const DerivationConfig& cfg,
                          const MiniGenOptions& opts = {});

/// The deterministic mini-field rule, exposed for tests.
BigInt mini_field_prime(unsigned bits);

}  // namespace frog

#include "frog/derivation.hpp"

#include <ostream>

#include "frog/blake3.hpp"
#include "frog/primality.hpp"

#ifdef FROG_HAVE_OPENMP
#include <omp.h>
#endif

namespace frog {

namespace {

void append_index(std::vector<uint8_t>& msg, IndexEncoding enc, uint64_t index) {
    switch (enc) {
        case IndexEncoding::AsciiDecimal: {
            std::string s = std::to_string(index);
            msg.insert(msg.end(), s.begin(), s.end());
            break;
        }
        case IndexEncoding::U64BigEndian:
            for (int i = 7; i >= 0; --i) msg.push_back(static_cast<uint8_t>(index >> (8 * i)));
            break;
        case IndexEncoding::U64LittleEndian:
            for (int i = 0; i < 8; ++i) msg.push_back(static_cast<uint8_t>(index >> (8 * i)));
            break;
    }
}

const char* index_encoding_name(IndexEncoding e) {
    switch (e) {
        case IndexEncoding::AsciiDecimal: return "ascii-decimal";
        case IndexEncoding::U64BigEndian: return "u64-be";
        case IndexEncoding::U64LittleEndian: return "u64-le";
    }
    return "?";
}

}  // namespace

std::vector<uint8_t> DerivationConfig::message(const std::string& tag, uint64_t index) const {
    std::vector<uint8_t> msg(seed.begin(), seed.end());
    msg.push_back('|');
    msg.insert(msg.end(), tag.begin(), tag.end());
    msg.push_back('|');
    append_index(msg, index_encoding, index);
    return msg;
}

std::string DerivationConfig::describe() const {
    std::string s = "seed=" + seed;
    s += ";index=" + std::string(index_encoding_name(index_encoding));
    s += ";digest=" + std::string(digest_endian == DigestEndian::Big ? "be" : "le");
    s += ";y=" + std::string(y_rule == YSelection::Even ? "even" : "odd");
    return s;
}

std::vector<DerivationConfig> config_space_for_seeds(std::span<const std::string> seeds) {
    std::vector<DerivationConfig> space;
    for (const auto& seed : seeds) {
        for (IndexEncoding ie : {IndexEncoding::AsciiDecimal, IndexEncoding::U64BigEndian,
                                 IndexEncoding::U64LittleEndian}) {
            for (DigestEndian de : {DigestEndian::Big, DigestEndian::Little}) {
                DerivationConfig cfg;
                cfg.seed = seed;
                cfg.index_encoding = ie;
                cfg.digest_endian = de;
                space.push_back(std::move(cfg));
            }
        }
    }
    return space;
}

std::vector<DerivationConfig> default_config_space() {
    // The publication prints the seed in two casings; both stay in play.
    const std::string seeds[] = {"ECCFrog522PP|v1", "ECCFROG522PP|v1"};
    return config_space_for_seeds(seeds);
}

BigInt derive_b_candidate(const DerivationConfig& cfg, uint64_t i, const BigInt& p) {
    auto digest = Blake3::hash(cfg.message(cfg.b_tag, i), DerivationConfig::kDigestLen);
    return int_from_digest(digest, p - BigInt{3ul}, cfg.digest_endian) + BigInt{2ul};
}

BigInt derive_gx_candidate(const DerivationConfig& cfg, uint64_t j, const BigInt& p) {
    auto digest = Blake3::hash(cfg.message(cfg.g_tag, j), DerivationConfig::kDigestLen);
    return int_from_digest(digest, p, cfg.digest_endian);
}

ResolutionResult resolve_encoding(const BigInt& published_b, uint64_t i, const BigInt& p,
                                  std::span<const DerivationConfig> space) {
    if (space.empty()) {
        throw std::invalid_argument("resolve_encoding: empty configuration space");
    }
    ResolutionResult res;
    for (const auto& cfg : space) {
        if (derive_b_candidate(cfg, i, p) == published_b) res.matches.push_back(cfg);
    }
    if (res.matches.size() == 1) {
        res.status = ResolutionResult::Status::Resolved;
        res.config = res.matches.front();
    } else if (res.matches.empty()) {
        res.status = ResolutionResult::Status::Unresolved;
    } else {
        res.status = ResolutionResult::Status::Ambiguous;
    }
    return res;
}

void Transcript::line(uint64_t index, std::string_view status, std::string_view reason) {
    if (os_) (*os_) << index << ',' << status << ',' << reason << '\n';
}

BasePointResult find_base_point(const WeierstrassEq& eq, const BigInt& order,
                                const DerivationConfig& cfg, uint64_t cap,
                                Transcript* transcript) {
    const BigInt& p = eq.p();
    for (uint64_t j = 0; j < cap; ++j) {
        BigInt gx = derive_gx_candidate(cfg, j, p);
        FieldElement x = eq.field->element(gx);
        FieldElement rhs = x.square() * x + eq.a * x + eq.b;
        auto roots = rhs.sqrt();
        if (!roots) {
            if (transcript) transcript->line(j, "reject", "x-non-residue");
            continue;
        }
        const bool want_even = cfg.y_rule == YSelection::Even;
        const FieldElement& y =
            roots->first.value().is_even() == want_even ? roots->first : roots->second;
        Point g = Point::affine(x, y);
        if (!jac_scalar_mul_vartime(order, g, eq).is_identity()) {
            if (transcript) transcript->line(j, "reject", "order-check-failed");
            continue;
        }
        if (transcript) transcript->line(j, "accept", "full-order");
        return {g, j};
    }
    throw std::runtime_error("find_base_point: iteration cap exceeded");
}

BasePointResult find_base_point(const CurveParams& c, const DerivationConfig& cfg, uint64_t cap) {
    return find_base_point(c.eq(), c.order(), cfg, cap);
}

BigInt mini_field_prime(unsigned bits) {
    if (bits < 16 || bits > 48) {
        throw std::invalid_argument("mini_field_prime: bits must be in [16, 48]");
    }
    // Smallest prime >= 2^(bits-1) congruent 3 mod 4, so square roots stay
    // on the (p+1)/4 fast path.
    BigInt c = BigInt::pow2(bits - 1) + BigInt{3ul};
    while (!(c.mod_ui(4) == 3 && baillie_psw(c))) c += BigInt{4ul};
    return c;
}

namespace {

struct BCandidate {
    BigInt b;
    bool singular = false;
    bool prime_order = false;
    BigInt order;
};

BCandidate evaluate_b_index(const DerivationConfig& cfg, uint64_t i,
                            std::shared_ptr<const PrimeField> field) {
    BCandidate cand;
    const BigInt& p = field->modulus();
    cand.b = derive_b_candidate(cfg, i, p);
    WeierstrassEq eq{field, p - BigInt{9ul}, cand.b};
    if (!eq.non_singular()) {
        cand.singular = true;
        return cand;
    }
    // Deterministic per-index stream keeps the BSGS path reproducible.
    SeededRng rng{0x66726f67ull ^ (i * 0x9e3779b97f4a7c15ull) ^ p.mod_ui(1ull << 62)};
    cand.order = count_points(eq, &rng, kernels::Exec::Serial);
    cand.prime_order = baillie_psw(cand.order);
    return cand;
}

}  // namespace

CurveParams mini_generate(unsigned bits, const DerivationConfig& cfg, const MiniGenOptions& opts) {
    BigInt p = mini_field_prime(bits);
    auto field = std::make_shared<const PrimeField>(p);

    // Ordered block scan: blocks are evaluated in parallel but consumed in
    // index order, so the accepted index matches the serial scan exactly.
    const uint64_t block = 32;
    std::optional<BCandidate> accepted;
    uint64_t accepted_index = 0;
    for (uint64_t start = 0; start < opts.b_index_cap && !accepted; start += block) {
        const uint64_t end = std::min(start + block, opts.b_index_cap);
        std::vector<BCandidate> results(end - start);
        if (opts.mode == kernels::Exec::Parallel) {
#ifdef FROG_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (int64_t k = 0; k < static_cast<int64_t>(end - start); ++k) {
                results[static_cast<size_t>(k)] =
                    evaluate_b_index(cfg, start + static_cast<uint64_t>(k), field);
            }
        } else {
            for (uint64_t k = 0; k < end - start; ++k) {
                results[k] = evaluate_b_index(cfg, start + k, field);
            }
        }
        for (uint64_t k = 0; k < end - start; ++k) {
            const uint64_t i = start + k;
            if (results[k].singular) {
                if (opts.transcript) opts.transcript->line(i, "reject", "singular");
                continue;
            }
            if (!results[k].prime_order) {
                if (opts.transcript) opts.transcript->line(i, "reject", "composite-order");
                continue;
            }
            if (opts.transcript) opts.transcript->line(i, "accept", "prime-order");
            accepted = results[k];
            accepted_index = i;
            break;
        }
    }
    if (!accepted) throw std::runtime_error("mini_generate: b-index cap exceeded");

    WeierstrassEq eq{field, p - BigInt{9ul}, accepted->b};
    BasePointResult bp =
        find_base_point(eq, accepted->order, cfg, opts.g_index_cap, opts.transcript);

    PublishedFacts facts;
    facts.trace = p + BigInt{1ul} - accepted->order;
    facts.cm_discriminant = facts.trace * facts.trace - BigInt{4ul} * p;
    facts.twist_order = BigInt{2ul} * (p + BigInt{1ul}) - accepted->order;
    Provenance prov{cfg.seed, accepted_index, bp.index};
    std::string name = "minifrog" + std::to_string(bits);
    return CurveParams(std::move(name), std::move(eq), bp.point, accepted->order, 1, prov,
                       std::move(facts));
}

}  // namespace frog

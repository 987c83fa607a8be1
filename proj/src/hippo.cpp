#include "frog/hippo.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/kdf.h>

#include <cstring>
#include <memory>

#include "frog/registry.hpp"

namespace frog {

namespace {

constexpr size_t kTagLen = 16;
constexpr const char* kHkdfLabel = "HippoFrog-v1";
// Single-shot GCM limit: 2^39 - 256 bits of plaintext.
constexpr uint64_t kGcmMaxBytes = (uint64_t{1} << 36) - 32;

void put_u64_be(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

/// Full public-key validation: on curve, finite, and killed by N. With
/// cofactor 1 the subgroup check is exactly [N]Q = O.
void validate_peer_point(const Point& q, const CurveParams& c) {
    if (q.is_identity()) throw InvalidPointError("peer point is the identity");
    if (!is_on_curve(q, c.eq())) throw InvalidPointError("peer point is off the curve");
    if (!jac_scalar_mul_vartime(c.order(), q, c.eq()).is_identity()) {
        throw InvalidPointError("peer point is not in the prime-order group");
    }
}

}  // namespace

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
    std::array<uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw CryptoError("SHA-256 failure");
    }
    return out;
}

std::vector<uint8_t> hkdf_sha256(std::span<const uint8_t> salt, std::span<const uint8_t> ikm,
                                 std::span<const uint8_t> info, size_t out_len) {
    std::unique_ptr<EVP_KDF, decltype(&EVP_KDF_free)> kdf(EVP_KDF_fetch(nullptr, "HKDF", nullptr),
                                                          EVP_KDF_free);
    if (!kdf) throw CryptoError("HKDF: fetch failed");
    std::unique_ptr<EVP_KDF_CTX, decltype(&EVP_KDF_CTX_free)> ctx(EVP_KDF_CTX_new(kdf.get()),
                                                                  EVP_KDF_CTX_free);
    if (!ctx) throw CryptoError("HKDF: context allocation failed");

    OSSL_PARAM params[5];
    size_t n = 0;
    params[n++] = OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_DIGEST,
                                                   const_cast<char*>("SHA256"), 0);
    params[n++] = OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_KEY,
                                                    const_cast<uint8_t*>(ikm.data()), ikm.size());
    if (!salt.empty()) {
        params[n++] = OSSL_PARAM_construct_octet_string(
            OSSL_KDF_PARAM_SALT, const_cast<uint8_t*>(salt.data()), salt.size());
    }
    if (!info.empty()) {
        params[n++] = OSSL_PARAM_construct_octet_string(
            OSSL_KDF_PARAM_INFO, const_cast<uint8_t*>(info.data()), info.size());
    }
    params[n] = OSSL_PARAM_construct_end();

    std::vector<uint8_t> out(out_len);
    if (EVP_KDF_derive(ctx.get(), out.data(), out.size(), params) != 1) {
        throw CryptoError("HKDF: derive failed");
    }
    return out;
}

std::vector<uint8_t> aes256gcm_encrypt(std::span<const uint8_t> key, std::span<const uint8_t> nonce,
                                       std::span<const uint8_t> aad, std::span<const uint8_t> pt) {
    if (key.size() != 32 || nonce.size() != 12) throw CryptoError("AES-256-GCM: bad key/nonce size");
    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                        EVP_CIPHER_CTX_free);
    if (!ctx) throw CryptoError("AES-256-GCM: context allocation failed");
    if (EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1) {
        throw CryptoError("AES-256-GCM: init failed");
    }
    int len = 0;
    if (!aad.empty() &&
        EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1) {
        throw CryptoError("AES-256-GCM: AAD failed");
    }
    std::vector<uint8_t> out(pt.size() + kTagLen);
    int ct_len = 0;
    if (!pt.empty()) {
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, pt.data(), static_cast<int>(pt.size())) !=
            1) {
            throw CryptoError("AES-256-GCM: encrypt failed");
        }
        ct_len = len;
    }
    if (EVP_EncryptFinal_ex(ctx.get(), out.data() + ct_len, &len) != 1) {
        throw CryptoError("AES-256-GCM: final failed");
    }
    ct_len += len;
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_GET_TAG, kTagLen, out.data() + ct_len) != 1) {
        throw CryptoError("AES-256-GCM: tag retrieval failed");
    }
    out.resize(static_cast<size_t>(ct_len) + kTagLen);
    return out;
}

std::vector<uint8_t> aes256gcm_decrypt(std::span<const uint8_t> key, std::span<const uint8_t> nonce,
                                       std::span<const uint8_t> aad,
                                       std::span<const uint8_t> ct_and_tag) {
    if (key.size() != 32 || nonce.size() != 12) throw CryptoError("AES-256-GCM: bad key/nonce size");
    if (ct_and_tag.size() < kTagLen) throw AuthenticationError("AES-256-GCM: truncated input");
    const size_t ct_len = ct_and_tag.size() - kTagLen;

    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)> ctx(EVP_CIPHER_CTX_new(),
                                                                        EVP_CIPHER_CTX_free);
    if (!ctx) throw CryptoError("AES-256-GCM: context allocation failed");
    if (EVP_DecryptInit_ex(ctx.get(), EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1) {
        throw CryptoError("AES-256-GCM: init failed");
    }
    int len = 0;
    if (!aad.empty() &&
        EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1) {
        throw CryptoError("AES-256-GCM: AAD failed");
    }
    std::vector<uint8_t> out(ct_len);
    int pt_len = 0;
    if (ct_len > 0) {
        if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, ct_and_tag.data(),
                              static_cast<int>(ct_len)) != 1) {
            throw CryptoError("AES-256-GCM: decrypt failed");
        }
        pt_len = len;
    }
    std::array<uint8_t, kTagLen> tag;
    std::memcpy(tag.data(), ct_and_tag.data() + ct_len, kTagLen);
    if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_GCM_SET_TAG, kTagLen, tag.data()) != 1) {
        throw CryptoError("AES-256-GCM: tag set failed");
    }
    if (EVP_DecryptFinal_ex(ctx.get(), out.data() + pt_len, &len) != 1) {
        throw AuthenticationError("AES-256-GCM: tag verification failed");
    }
    out.resize(static_cast<size_t>(pt_len) + len);
    return out;
}

std::array<uint8_t, 32> param_hash(const CurveParams& c) {
    if (c.cofactor() > 255) throw CryptoError("param_hash: cofactor exceeds one octet");
    const size_t fw = c.field().byte_length();
    std::vector<uint8_t> buf;
    buf.reserve(6 * fw + 1);
    auto append = [&](const BigInt& v) {
        auto bytes = v.to_bytes_be(fw);
        buf.insert(buf.end(), bytes.begin(), bytes.end());
    };
    append(c.field().modulus());
    append(c.a().value());
    append(c.b().value());
    append(c.generator().x().value());
    append(c.generator().y().value());
    append(c.order());
    buf.push_back(static_cast<uint8_t>(c.cofactor()));
    return sha256(buf);
}

KeyPair keygen(const CurveParams& c, Rng& rng) {
    BigInt sk = rng.uniform_nonzero_below(c.order());
    Scalar s = Scalar::from_value(sk);
    Point pk = scalar_mul(s, c.generator(), c);
    return {s, pk};
}

std::vector<uint8_t> ecdh(const Scalar& sk, const Point& peer_pk, const CurveParams& c) {
    validate_peer_point(peer_pk, c);
    if (sk.value().is_zero()) throw InvalidPointError("ecdh: zero scalar");
    Point shared = scalar_mul(sk, peer_pk, c);
    if (shared.is_identity()) throw InvalidPointError("ecdh: degenerate shared point");
    return shared.x().to_bytes();
}

std::vector<uint8_t> FileHeader::serialize() const {
    std::vector<uint8_t> out;
    out.reserve(kMagic.size() + 2 + curve_name.size() + param_hash.size() + ephemeral_pk.size() +
                hkdf_salt.size() + gcm_nonce.size() + 8);
    out.insert(out.end(), kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    if (curve_name.empty() || curve_name.size() > 255) {
        throw MalformedHeaderError("header: curve name length out of range");
    }
    out.push_back(static_cast<uint8_t>(curve_name.size()));
    out.insert(out.end(), curve_name.begin(), curve_name.end());
    out.insert(out.end(), param_hash.begin(), param_hash.end());
    out.insert(out.end(), ephemeral_pk.begin(), ephemeral_pk.end());
    out.insert(out.end(), hkdf_salt.begin(), hkdf_salt.end());
    out.insert(out.end(), gcm_nonce.begin(), gcm_nonce.end());
    put_u64_be(out, ciphertext_len);
    return out;
}

std::pair<FileHeader, size_t> FileHeader::parse(std::span<const uint8_t> data) {
    FileHeader h;
    size_t pos = 0;
    auto need = [&](size_t n) {
        if (data.size() - pos < n) throw MalformedHeaderError("header: truncated");
    };
    need(kMagic.size() + 2);
    if (!std::equal(kMagic.begin(), kMagic.end(), data.begin())) {
        throw MalformedHeaderError("header: bad magic");
    }
    pos += kMagic.size();
    if (data[pos++] != kVersion) throw MalformedHeaderError("header: unsupported version");
    const size_t name_len = data[pos++];
    if (name_len == 0) throw MalformedHeaderError("header: empty curve name");
    need(name_len);
    h.curve_name.assign(reinterpret_cast<const char*>(data.data() + pos), name_len);
    pos += name_len;

    // The point width comes from the named curve; an unknown name cannot be
    // parsed further.
    size_t fw = 0;
    try {
        fw = registry_get(h.curve_name).field().byte_length();
    } catch (const UnknownCurveError&) {
        throw MalformedHeaderError("header: unknown curve name " + h.curve_name);
    }
    const size_t pk_len = 1 + 2 * fw;

    need(h.param_hash.size() + pk_len + h.hkdf_salt.size() + h.gcm_nonce.size() + 8);
    std::memcpy(h.param_hash.data(), data.data() + pos, h.param_hash.size());
    pos += h.param_hash.size();
    h.ephemeral_pk.assign(data.begin() + pos, data.begin() + pos + pk_len);
    pos += pk_len;
    std::memcpy(h.hkdf_salt.data(), data.data() + pos, h.hkdf_salt.size());
    pos += h.hkdf_salt.size();
    std::memcpy(h.gcm_nonce.data(), data.data() + pos, h.gcm_nonce.size());
    pos += h.gcm_nonce.size();
    h.ciphertext_len = 0;
    for (int i = 0; i < 8; ++i) h.ciphertext_len = (h.ciphertext_len << 8) | data[pos + i];
    pos += 8;
    return {std::move(h), pos};
}

std::vector<uint8_t> encrypt_file(std::span<const uint8_t> plaintext, const CurveParams& c,
                                  const Point& recipient_pk, Rng& rng) {
    if (plaintext.size() > kGcmMaxBytes) {
        throw OversizeError("encrypt_file: plaintext exceeds the single-shot GCM limit");
    }
    validate_peer_point(recipient_pk, c);

    KeyPair ephemeral = keygen(c, rng);
    std::vector<uint8_t> shared = ecdh(ephemeral.sk, recipient_pk, c);

    FileHeader header;
    header.curve_name = c.name();
    header.param_hash = param_hash(c);
    header.ephemeral_pk = point_encode(ephemeral.pk, c, /*compressed=*/false);
    rng.fill(header.hkdf_salt);
    rng.fill(header.gcm_nonce);
    header.ciphertext_len = plaintext.size();

    std::vector<uint8_t> info(kHkdfLabel, kHkdfLabel + std::strlen(kHkdfLabel));
    info.insert(info.end(), header.param_hash.begin(), header.param_hash.end());
    std::vector<uint8_t> key = hkdf_sha256(header.hkdf_salt, shared, info, 32);

    std::vector<uint8_t> out = header.serialize();
    std::vector<uint8_t> ct = aes256gcm_encrypt(key, header.gcm_nonce, out, plaintext);
    out.insert(out.end(), ct.begin(), ct.end());
    return out;
}

std::vector<uint8_t> decrypt_file(std::span<const uint8_t> data, const CurveParams& c,
                                  const Scalar& sk) {
    auto [header, header_len] = FileHeader::parse(data);

    // Context binding comes first: no ECDH against an unverified context.
    if (header.param_hash != param_hash(c)) {
        throw ParamHashMismatchError("decrypt_file: header parameter hash does not match curve");
    }

    if (data.size() - header_len < kTagLen ||
        data.size() - header_len - kTagLen != header.ciphertext_len) {
        throw MalformedHeaderError("decrypt_file: payload length mismatch");
    }

    Point ephemeral;
    try {
        ephemeral = point_decode(header.ephemeral_pk, c);
    } catch (const std::invalid_argument& e) {
        throw InvalidPointError(std::string("decrypt_file: ephemeral key invalid: ") + e.what());
    }

    std::vector<uint8_t> shared = ecdh(sk, ephemeral, c);
    std::vector<uint8_t> info(kHkdfLabel, kHkdfLabel + std::strlen(kHkdfLabel));
    info.insert(info.end(), header.param_hash.begin(), header.param_hash.end());
    std::vector<uint8_t> key = hkdf_sha256(header.hkdf_salt, shared, info, 32);

    return aes256gcm_decrypt(key, header.gcm_nonce, data.first(header_len),
                             data.subspan(header_len));
}

}  // namespace frog

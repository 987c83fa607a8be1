#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frog/curve.hpp"
#include "frog/rng.hpp"

namespace frog {

struct CryptoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Header does not parse (bad magic/version/lengths/unknown curve).
struct MalformedHeaderError : CryptoError {
    using CryptoError::CryptoError;
};
/// Header parameter hash does not match the expected curve context.
struct ParamHashMismatchError : CryptoError {
    using CryptoError::CryptoError;
};
/// Peer/ephemeral point failed validation (off curve, identity, wrong order).
struct InvalidPointError : CryptoError {
    using CryptoError::CryptoError;
};
/// GCM tag verification failed; no plaintext is released.
struct AuthenticationError : CryptoError {
    using CryptoError::CryptoError;
};
struct OversizeError : CryptoError {
    using CryptoError::CryptoError;
};

/// SHA-256 over the canonical parameter serialization: fixed-width
/// big-endian p || a || b || Gx || Gy || N (ceil(bits(p)/8) octets each)
/// followed by one cofactor octet.
std::array<uint8_t, 32> param_hash(const CurveParams& c);

struct KeyPair {
    Scalar sk;
    Point pk;
};

/// sk uniform in [1, N-1] by rejection sampling, pk = [sk]G.
KeyPair keygen(const CurveParams& c, Rng& rng);

/// Validates peer_pk (on curve, not identity, [N]Q = O) before any secret
/// use, then returns the fixed-width big-endian x-coordinate of [sk]peer_pk.
std::vector<uint8_t> ecdh(const Scalar& sk, const Point& peer_pk, const CurveParams& c);

/// On-disk layout, all multi-octet integers big-endian:
/// "HFROG522" | 0x01 | name_len(1) | name | param_hash(32) |
/// ephemeral_pk(uncompressed) | hkdf_salt(32) | gcm_nonce(12) | ct_len(8)
struct FileHeader {
    static constexpr std::array<uint8_t, 8> kMagic = {'H', 'F', 'R', 'O', 'G', '5', '2', '2'};
    static constexpr uint8_t kVersion = 0x01;

    std::string curve_name;
    std::array<uint8_t, 32> param_hash;
    std::vector<uint8_t> ephemeral_pk;
    std::array<uint8_t, 32> hkdf_salt;
    std::array<uint8_t, 12> gcm_nonce;
    uint64_t ciphertext_len = 0;

    std::vector<uint8_t> serialize() const;
    /// Parses one header from the front of `data`; second element is the
    /// number of octets consumed. Throws MalformedHeaderError.
    static std::pair<FileHeader, size_t> parse(std::span<const uint8_t> data);

    bool operator==(const FileHeader&) const = default;
};

/// Ephemeral ECDH -> HKDF-SHA-256 -> AES-256-GCM, header as associated data.
std::vector<uint8_t> encrypt_file(std::span<const uint8_t> plaintext, const CurveParams& c,
                                  const Point& recipient_pk, Rng& rng);

/// Rejects on parameter-hash mismatch before any ECDH; releases plaintext
/// only after the tag verifies.
std::vector<uint8_t> decrypt_file(std::span<const uint8_t> data, const CurveParams& c,
                                  const Scalar& sk);

// Standard primitives (OpenSSL-backed), exposed for the vector tests.
std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);
std::vector<uint8_t> hkdf_sha256(std::span<const uint8_t> salt, std::span<const uint8_t> ikm,
                                 std::span<const uint8_t> info, size_t out_len);
std::vector<uint8_t> aes256gcm_encrypt(std::span<const uint8_t> key, std::span<const uint8_t> nonce,
                                       std::span<const uint8_t> aad, std::span<const uint8_t> pt);
std::vector<uint8_t> aes256gcm_decrypt(std::span<const uint8_t> key, std::span<const uint8_t> nonce,
                                       std::span<const uint8_t> aad,
                                       std::span<const uint8_t> ct_and_tag);

}  // namespace frog

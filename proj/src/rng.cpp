#include "frog/rng.hpp"

#include <openssl/rand.h>

#include <bit>
#include <cstring>
#include <stdexcept>

namespace frog {

BigInt Rng::uniform_below(const BigInt& n) {
    if (n.sign() <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
    size_t bits = n.bit_length();
    size_t nbytes = (bits + 7) / 8;
    unsigned topmask = bits % 8 ? (1u << (bits % 8)) - 1 : 0xffu;
    std::vector<uint8_t> buf(nbytes);
    for (;;) {
        fill(buf);
        buf[0] &= static_cast<uint8_t>(topmask);
        BigInt v = BigInt::from_bytes_be(buf);
        if (v < n) return v;
    }
}

BigInt Rng::uniform_nonzero_below(const BigInt& n) {
    for (;;) {
        BigInt v = uniform_below(n);
        if (!v.is_zero()) return v;
    }
}

void SystemRng::fill(std::span<uint8_t> out) {
    if (out.empty()) return;
    if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
        throw std::runtime_error("SystemRng: entropy source failure");
    }
}

SeededRng::SeededRng(uint64_t seed) {
    // splitmix64 expansion of the seed into the xoshiro state
    uint64_t x = seed;
    for (auto& w : s_) {
        x += 0x9e3779b97f4a7c15ull;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        w = z ^ (z >> 31);
    }
}

uint64_t SeededRng::next() {
    uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

void SeededRng::fill(std::span<uint8_t> out) {
    size_t i = 0;
    while (i < out.size()) {
        uint64_t w = next();
        size_t take = std::min<size_t>(8, out.size() - i);
        std::memcpy(out.data() + i, &w, take);
        i += take;
    }
}

}  // namespace frog

#include "frog/blake3.hpp"

#include <bit>
#include <cstring>

namespace frog {

namespace {

constexpr uint32_t kIV[8] = {
    0x6A09E667u, 0xBB67AE85u, 0x3C6EF372u, 0xA54FF53Au,
    0x510E527Fu, 0x9B05688Cu, 0x1F83D9ABu, 0x5BE0CD19u,
};

constexpr uint8_t kSchedule[7][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {2, 6, 3, 10, 7, 0, 4, 13, 1, 11, 12, 5, 9, 14, 15, 8},
    {3, 4, 10, 12, 13, 2, 7, 14, 6, 5, 9, 0, 11, 15, 8, 1},
    {10, 7, 12, 9, 14, 3, 13, 15, 4, 0, 11, 2, 5, 8, 1, 6},
    {12, 13, 9, 11, 15, 10, 14, 8, 7, 2, 5, 3, 0, 1, 6, 4},
    {9, 14, 11, 5, 8, 12, 15, 1, 13, 3, 0, 10, 2, 6, 4, 7},
    {11, 15, 5, 0, 1, 9, 8, 6, 14, 10, 2, 12, 3, 4, 7, 13},
};

enum Flags : uint8_t {
    CHUNK_START = 1 << 0,
    CHUNK_END = 1 << 1,
    PARENT = 1 << 2,
    ROOT = 1 << 3,
};

constexpr size_t kBlockLen = 64;
constexpr size_t kChunkLen = 1024;

inline uint32_t load32_le(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

inline void store32_le(uint8_t* p, uint32_t w) {
    p[0] = static_cast<uint8_t>(w);
    p[1] = static_cast<uint8_t>(w >> 8);
    p[2] = static_cast<uint8_t>(w >> 16);
    p[3] = static_cast<uint8_t>(w >> 24);
}

inline void g(uint32_t* s, size_t a, size_t b, size_t c, size_t d, uint32_t x, uint32_t y) {
    s[a] = s[a] + s[b] + x;
    s[d] = std::rotr(s[d] ^ s[a], 16);
    s[c] = s[c] + s[d];
    s[b] = std::rotr(s[b] ^ s[c], 12);
    s[a] = s[a] + s[b] + y;
    s[d] = std::rotr(s[d] ^ s[a], 8);
    s[c] = s[c] + s[d];
    s[b] = std::rotr(s[b] ^ s[c], 7);
}

void compress(const uint32_t cv[8], const uint8_t block[kBlockLen], uint8_t block_len,
              uint64_t counter, uint8_t flags, uint32_t out16[16]) {
    uint32_t m[16];
    for (size_t i = 0; i < 16; ++i) m[i] = load32_le(block + 4 * i);

    uint32_t s[16] = {
        cv[0], cv[1], cv[2], cv[3],
        cv[4], cv[5], cv[6], cv[7],
        kIV[0], kIV[1], kIV[2], kIV[3],
        static_cast<uint32_t>(counter), static_cast<uint32_t>(counter >> 32),
        static_cast<uint32_t>(block_len), static_cast<uint32_t>(flags),
    };

    for (const auto& sched : kSchedule) {
        g(s, 0, 4, 8, 12, m[sched[0]], m[sched[1]]);
        g(s, 1, 5, 9, 13, m[sched[2]], m[sched[3]]);
        g(s, 2, 6, 10, 14, m[sched[4]], m[sched[5]]);
        g(s, 3, 7, 11, 15, m[sched[6]], m[sched[7]]);
        g(s, 0, 5, 10, 15, m[sched[8]], m[sched[9]]);
        g(s, 1, 6, 11, 12, m[sched[10]], m[sched[11]]);
        g(s, 2, 7, 8, 13, m[sched[12]], m[sched[13]]);
        g(s, 3, 4, 9, 14, m[sched[14]], m[sched[15]]);
    }

    for (size_t i = 0; i < 8; ++i) {
        out16[i] = s[i] ^ s[i + 8];
        out16[i + 8] = s[i + 8] ^ cv[i];
    }
}

inline uint8_t start_flag(uint8_t blocks_compressed) {
    return blocks_compressed == 0 ? CHUNK_START : 0;
}

}  // namespace

Blake3::Blake3() {
    std::memcpy(chunk_.cv, kIV, sizeof(kIV));
    chunk_.chunk_counter = 0;
    std::memset(chunk_.buf, 0, sizeof(chunk_.buf));
    chunk_.buf_len = 0;
    chunk_.blocks_compressed = 0;
}

Blake3::Output Blake3::chunk_output(const ChunkState& cs) {
    Output o;
    std::memcpy(o.input_cv, cs.cv, 32);
    std::memcpy(o.block, cs.buf, kBlockLen);
    o.block_len = cs.buf_len;
    o.counter = cs.chunk_counter;
    o.flags = static_cast<uint8_t>(start_flag(cs.blocks_compressed) | CHUNK_END);
    return o;
}

Blake3::Output Blake3::parent_output(const uint8_t block[kBlockLen]) {
    Output o;
    std::memcpy(o.input_cv, kIV, 32);
    std::memcpy(o.block, block, kBlockLen);
    o.block_len = kBlockLen;
    o.counter = 0;
    o.flags = PARENT;
    return o;
}

void Blake3::chaining_value(const Output& o, uint8_t cv_out[32]) {
    uint32_t out16[16];
    compress(o.input_cv, o.block, o.block_len, o.counter, o.flags, out16);
    for (size_t i = 0; i < 8; ++i) store32_le(cv_out + 4 * i, out16[i]);
}

void Blake3::root_bytes(const Output& o, std::span<uint8_t> out) {
    uint64_t block_counter = 0;
    size_t pos = 0;
    while (pos < out.size()) {
        uint32_t out16[16];
        compress(o.input_cv, o.block, o.block_len, block_counter,
                 static_cast<uint8_t>(o.flags | ROOT), out16);
        uint8_t wide[64];
        for (size_t i = 0; i < 16; ++i) store32_le(wide + 4 * i, out16[i]);
        size_t take = std::min(out.size() - pos, sizeof(wide));
        std::memcpy(out.data() + pos, wide, take);
        pos += take;
        ++block_counter;
    }
}

void Blake3::push_cv(const uint8_t cv[32], uint64_t total_chunks) {
    // Each trailing zero bit of the completed chunk count closes one
    // subtree: merge the stack top (left child) into the incoming CV until
    // the count is odd, then push. The stack then holds one CV per set bit.
    uint8_t merged[32];
    std::memcpy(merged, cv, 32);
    while ((total_chunks & 1) == 0) {
        uint8_t block[kBlockLen];
        std::memcpy(block, cv_stack_ + (cv_stack_len_ - 1) * 32, 32);
        std::memcpy(block + 32, merged, 32);
        --cv_stack_len_;
        chaining_value(parent_output(block), merged);
        total_chunks >>= 1;
    }
    std::memcpy(cv_stack_ + cv_stack_len_ * 32, merged, 32);
    ++cv_stack_len_;
}

void Blake3::update(std::span<const uint8_t> input) {
    size_t pos = 0;
    while (pos < input.size()) {
        size_t chunk_len = kBlockLen * chunk_.blocks_compressed + chunk_.buf_len;
        if (chunk_len == kChunkLen) {
            uint8_t cv[32];
            chaining_value(chunk_output(chunk_), cv);
            uint64_t total_chunks = chunk_.chunk_counter + 1;
            push_cv(cv, total_chunks);
            std::memcpy(chunk_.cv, kIV, 32);
            chunk_.chunk_counter = total_chunks;
            std::memset(chunk_.buf, 0, kBlockLen);
            chunk_.buf_len = 0;
            chunk_.blocks_compressed = 0;
            chunk_len = 0;
        }
        // Compress the buffered block only once more input arrives, so the
        // final block of the message stays in the buffer for CHUNK_END.
        if (chunk_.buf_len == kBlockLen) {
            uint32_t out16[16];
            compress(chunk_.cv, chunk_.buf, kBlockLen, chunk_.chunk_counter,
                     start_flag(chunk_.blocks_compressed), out16);
            for (size_t i = 0; i < 8; ++i) chunk_.cv[i] = out16[i];
            ++chunk_.blocks_compressed;
            std::memset(chunk_.buf, 0, kBlockLen);
            chunk_.buf_len = 0;
        }
        size_t take = std::min(kBlockLen - chunk_.buf_len,
                               std::min(kChunkLen - (kBlockLen * chunk_.blocks_compressed + chunk_.buf_len),
                                        input.size() - pos));
        std::memcpy(chunk_.buf + chunk_.buf_len, input.data() + pos, take);
        chunk_.buf_len += static_cast<uint8_t>(take);
        pos += take;
    }
}

void Blake3::finalize_xof(std::span<uint8_t> out) const {
    Output o = chunk_output(chunk_);
    size_t remaining = cv_stack_len_;
    while (remaining > 0) {
        --remaining;
        uint8_t block[kBlockLen];
        std::memcpy(block, cv_stack_ + remaining * 32, 32);
        chaining_value(o, block + 32);
        o = parent_output(block);
    }
    root_bytes(o, out);
}

std::vector<uint8_t> Blake3::hash(std::span<const uint8_t> input, size_t out_len) {
    Blake3 h;
    h.update(input);
    std::vector<uint8_t> out(out_len);
    h.finalize_xof(out);
    return out;
}

std::vector<uint8_t> Blake3::hash(const std::string& input, size_t out_len) {
    return hash(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(input.data()), input.size()),
                out_len);
}

}  // namespace frog

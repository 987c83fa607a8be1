#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frog {

/// Portable BLAKE3 (plain hash mode) with extendable output.
/// Follows the reference tree construction: 1 KiB chunks, 64-byte blocks,
/// binary merge stack, root XOF blocks counted from zero.
class Blake3 {
public:
    Blake3();

    void update(std::span<const uint8_t> input);

    /// Extendable output; any length, independent of prior finalize calls.
    void finalize_xof(std::span<uint8_t> out) const;

    static std::vector<uint8_t> hash(std::span<const uint8_t> input, size_t out_len = 32);
    static std::vector<uint8_t> hash(const std::string& input, size_t out_len = 32);

private:
    struct ChunkState {
        uint32_t cv[8];
        uint64_t chunk_counter;
        uint8_t buf[64];
        uint8_t buf_len;
        uint8_t blocks_compressed;
    };
    struct Output {
        uint32_t input_cv[8];
        uint8_t block[64];
        uint8_t block_len;
        uint64_t counter;
        uint8_t flags;
    };

    static Output chunk_output(const ChunkState& cs);
    static Output parent_output(const uint8_t block[64]);
    static void chaining_value(const Output& o, uint8_t cv_out[32]);
    static void root_bytes(const Output& o, std::span<uint8_t> out);
    void push_cv(const uint8_t cv[32], uint64_t total_chunks);

    ChunkState chunk_;
    uint8_t cv_stack_[55 * 32];
    size_t cv_stack_len_ = 0;
};

}  // namespace frog

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace minrank {

// ChaCha20 block function (RFC 8439, 20 rounds).
std::array<std::uint32_t, 16> chacha20_block(const std::array<std::uint32_t, 8>& key, std::uint32_t counter,
                                             const std::array<std::uint32_t, 3>& nonce);

/// Deterministic stream generator used for every random instance.
///
/// The 64-bit seed fills key words 0 (low half) and 1 (high half); the other
/// key words and the nonce are zero. Blocks are produced for counter 0, 1, ...
/// and their 16 output words are consumed in order. A value in [0, bound) is
/// drawn by rejection: take the next word w, accept if
/// w < 2^32 - (2^32 mod bound), return w mod bound.
class ChaChaRng {
public:
    using result_type = std::uint32_t;

    explicit ChaChaRng(std::uint64_t seed);

    std::uint32_t next_u32();
    std::uint32_t uniform(std::uint32_t bound);

    result_type operator()() { return next_u32(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    std::array<std::uint32_t, 8> key_{};
    std::array<std::uint32_t, 16> block_{};
    std::uint32_t counter_ = 0;
    unsigned pos_ = 16;
};

}  // namespace minrank

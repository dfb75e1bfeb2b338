#include "minrank/rng.hpp"

#include "minrank/error.hpp"

#include <bit>

namespace minrank {

namespace {

inline void quarter_round(std::array<std::uint32_t, 16>& s, int a, int b, int c, int d) {
    s[a] += s[b]; s[d] ^= s[a]; s[d] = std::rotl(s[d], 16);
    s[c] += s[d]; s[b] ^= s[c]; s[b] = std::rotl(s[b], 12);
    s[a] += s[b]; s[d] ^= s[a]; s[d] = std::rotl(s[d], 8);
    s[c] += s[d]; s[b] ^= s[c]; s[b] = std::rotl(s[b], 7);
}

}  // namespace

std::array<std::uint32_t, 16> chacha20_block(const std::array<std::uint32_t, 8>& key, std::uint32_t counter,
                                             const std::array<std::uint32_t, 3>& nonce) {
    std::array<std::uint32_t, 16> init{0x61707865, 0x3320646e, 0x79622d32, 0x6b206574};
    for (int i = 0; i < 8; ++i) init[4 + i] = key[i];
    init[12] = counter;
    for (int i = 0; i < 3; ++i) init[13 + i] = nonce[i];

    auto s = init;
    for (int round = 0; round < 10; ++round) {
        quarter_round(s, 0, 4, 8, 12);
        quarter_round(s, 1, 5, 9, 13);
        quarter_round(s, 2, 6, 10, 14);
        quarter_round(s, 3, 7, 11, 15);
        quarter_round(s, 0, 5, 10, 15);
        quarter_round(s, 1, 6, 11, 12);
        quarter_round(s, 2, 7, 8, 13);
        quarter_round(s, 3, 4, 9, 14);
    }
    for (int i = 0; i < 16; ++i) s[i] += init[i];
    return s;
}

ChaChaRng::ChaChaRng(std::uint64_t seed) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32U);
}

std::uint32_t ChaChaRng::next_u32() {
    if (pos_ == 16) {
        block_ = chacha20_block(key_, counter_++, {0, 0, 0});
        pos_ = 0;
    }
    return block_[pos_++];
}

std::uint32_t ChaChaRng::uniform(std::uint32_t bound) {
    if (bound == 0) throw InvalidArgument("uniform: zero bound");
    const std::uint64_t span = std::uint64_t{1} << 32U;
    const std::uint64_t limit = span - span % bound;
    for (;;) {
        std::uint32_t w = next_u32();
        if (w < limit) return w % bound;
    }
}

}  // namespace minrank

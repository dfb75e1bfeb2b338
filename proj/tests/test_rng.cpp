#include "minrank/rng.hpp"

#include <doctest.h>

#include <vector>

using namespace minrank;

TEST_CASE("chacha20 block matches the RFC 8439 test vector") {
    std::array<std::uint32_t, 8> key{};
    for (int i = 0; i < 8; ++i) {
        std::uint32_t b = 4 * i;
        key[i] = b | (b + 1) << 8 | (b + 2) << 16 | (b + 3) << 24;
    }
    auto out = chacha20_block(key, 1, {0x09000000, 0x4a000000, 0x00000000});
    const std::array<std::uint32_t, 16> expected{0xe4e7f110, 0x15593bd1, 0x1fdd0f50, 0xc47120a3, 0xc7f4d1c7, 0x0368c033,
                                                 0x9aaa2204, 0x4e6cd4c3, 0x466482d2, 0x09aa9f07, 0x05d7c214, 0xa2028bd9,
                                                 0xd19c12b5, 0xb94e16de, 0xe883d0cb, 0x4e3c50a2};
    CHECK(out == expected);
}

TEST_CASE("stream is deterministic per seed") {
    ChaChaRng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u32();
        CHECK(x == b.next_u32());
        differs = differs || x != c.next_u32();
    }
    CHECK(differs);
}

TEST_CASE("uniform draws are in range and roughly flat") {
    ChaChaRng rng(7);
    const std::uint32_t q = 7;
    std::vector<int> hist(q, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        auto v = rng.uniform(q);
        REQUIRE(v < q);
        ++hist[v];
    }
    // chi-square with 6 degrees of freedom; 22.46 is the 0.999 quantile
    double chi = 0, expect = static_cast<double>(draws) / q;
    for (int h : hist) chi += (h - expect) * (h - expect) / expect;
    CHECK(chi < 22.46);
}

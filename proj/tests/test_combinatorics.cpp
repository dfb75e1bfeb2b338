#include "minrank/combinatorics.hpp"
#include "minrank/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace minrank;

TEST_CASE("binomials") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(3, 4) == 0);
    CHECK(binom(66, 33) == 7219428434016265740ULL);
    CHECK_THROWS_AS(binom(70, 35), CapExceeded);
    CHECK(binom_big(70, 35) == BigInt("112186277816662845432"));
    for (std::uint64_t n = 0; n < 30; ++n)
        for (std::uint64_t k = 1; k <= n; ++k) CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("colex subset rank, n = 4, k = 2") {
    // {1,2},{1,3},{2,3},{1,4},{2,4},{3,4} in 1-based labels
    const std::vector<std::vector<std::uint32_t>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(oracle::colex_subsets(4, 2) == expected);
    for (std::uint64_t i = 0; i < expected.size(); ++i) {
        CHECK(subset_rank(expected[i], 4) == i);
        CHECK(subset_unrank(i, 4, 2) == expected[i]);
    }
    std::vector<std::uint32_t> full{0, 1, 2, 3};
    CHECK(subset_rank(full, 4) == 0);
}

TEST_CASE("subset enumeration matches the colex oracle") {
    for (std::uint32_t n = 0; n <= 9; ++n)
        for (std::uint32_t k = 0; k <= n; ++k) {
            auto ours = all_subsets(n, k);
            auto ref = oracle::colex_subsets(n, k);
            REQUIRE(ours == ref);
            for (std::uint64_t i = 0; i < ours.size(); ++i) {
                CHECK(subset_rank(ours[i], n) == i);
                CHECK(subset_unrank(i, n, k) == ours[i]);
            }
        }
    CHECK(all_subsets(8, 3).size() == 56);
}

TEST_CASE("subset errors") {
    std::vector<std::uint32_t> bad{2, 1};
    CHECK_THROWS_AS(subset_rank(bad, 4), InvalidArgument);
    std::vector<std::uint32_t> out{0, 4};
    CHECK_THROWS_AS(subset_rank(out, 4), InvalidArgument);
    CHECK_THROWS_AS(subset_unrank(6, 4, 2), InvalidArgument);
}

TEST_CASE("monomial order is graded colex on exponent vectors") {
    for (std::uint32_t K = 1; K <= 5; ++K)
        for (std::uint32_t d = 0; d <= 4; ++d) {
            auto monos = all_monomials(K, d);
            auto ref = oracle::colex_exponents(K, d);
            REQUIRE(monos.size() == ref.size());
            CHECK(monos.size() == monomial_count(K, d));
            for (std::size_t i = 0; i < monos.size(); ++i) {
                CHECK(exponent_vector(monos[i], K) == ref[i]);
                CHECK(monomial_rank(monos[i], K) == i);
                CHECK(monomial_unrank(i, K, d) == monos[i]);
            }
        }
    // pinned: degree 2 in 3 variables
    const std::vector<Monomial> pinned{{0, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}};
    CHECK(all_monomials(3, 2) == pinned);
    CHECK(times_variable(Monomial{0, 2}, 1) == Monomial{0, 1, 2});
}

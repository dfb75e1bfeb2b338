#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace minrank {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k) in 64 bits; throws CapExceeded on overflow. C(n, k) = 0 for k > n.
std::uint64_t binom(std::uint64_t n, std::uint64_t k);
BigInt binom_big(std::uint64_t n, std::uint64_t k);
// Overflow-checked a * b.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// Subsets are strictly increasing lists of 0-based indices. The rank is the
// colexicographic position, sum_t C(j_t, t + 1), so that {0,1} < {0,2} <
// {1,2} < {0,3} < ...
std::uint64_t subset_rank(std::span<const std::uint32_t> subset, std::uint32_t n);
std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k);
// All k-subsets of [0, n) in colex order.
std::vector<std::vector<std::uint32_t>> all_subsets(std::uint32_t n, std::uint32_t k);

/// Monomial in K variables, stored as the nondecreasing list of its variable
/// indices (x_0^2 x_2 -> {0, 0, 2}).
///
/// Monomials of one degree are ordered graded-colexicographically on their
/// exponent vectors: compare the exponent of the highest variable first. This
/// coincides with colex order on the shifted subsets {l_t + t}, which gives
/// the rank.
using Monomial = std::vector<std::uint32_t>;

std::uint64_t monomial_count(std::uint32_t nvars, std::uint32_t degree);
std::uint64_t monomial_rank(std::span<const std::uint32_t> mono, std::uint32_t nvars);
Monomial monomial_unrank(std::uint64_t rank, std::uint32_t nvars, std::uint32_t degree);
std::vector<Monomial> all_monomials(std::uint32_t nvars, std::uint32_t degree);
std::vector<std::uint32_t> exponent_vector(std::span<const std::uint32_t> mono, std::uint32_t nvars);
// Product of a monomial with a single variable.
Monomial times_variable(std::span<const std::uint32_t> mono, std::uint32_t var);

}  // namespace minrank

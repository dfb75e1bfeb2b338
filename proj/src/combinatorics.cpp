#include "minrank/combinatorics.hpp"

#include "minrank/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace minrank {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    if (p > std::numeric_limits<std::uint64_t>::max()) throw CapExceeded("64-bit index arithmetic overflow");
    return static_cast<std::uint64_t>(p);
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > std::numeric_limits<std::uint64_t>::max())
            throw CapExceeded("binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

BigInt binom_big(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt c = 1;
    for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

std::uint64_t subset_rank(std::span<const std::uint32_t> subset, std::uint32_t n) {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < subset.size(); ++t) {
        if (subset[t] >= n) throw InvalidArgument("subset element out of range");
        if (t > 0 && subset[t - 1] >= subset[t]) throw InvalidArgument("subset not strictly increasing");
        r += binom(subset[t], t + 1);
    }
    return r;
}

std::vector<std::uint32_t> subset_unrank(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
    if (k > n || rank >= binom(n, k)) throw InvalidArgument("subset rank out of range");
    std::vector<std::uint32_t> s(k);
    std::uint32_t hi = n;
    for (std::uint32_t t = k; t-- > 0;) {
        // largest c < hi with C(c, t + 1) <= rank
        std::uint32_t c = hi - 1;
        while (binom(c, t + 1) > rank) --c;
        s[t] = c;
        rank -= binom(c, t + 1);
        hi = c;
    }
    return s;
}

std::vector<std::vector<std::uint32_t>> all_subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    if (k > n) return out;
    std::uint64_t count = binom(n, k);
    out.reserve(count);
    // Successor in colex order: bump the lowest element that can move up.
    std::vector<std::uint32_t> s(k);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = i;
    for (std::uint64_t r = 0; r < count; ++r) {
        out.push_back(s);
        std::uint32_t i = 0;
        while (i < k && (i + 1 < k ? s[i] + 1 == s[i + 1] : s[i] + 1 == n)) ++i;
        if (i == k) break;
        ++s[i];
        for (std::uint32_t j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

std::uint64_t monomial_count(std::uint32_t nvars, std::uint32_t degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binom(static_cast<std::uint64_t>(nvars) + degree - 1, degree);
}

std::uint64_t monomial_rank(std::span<const std::uint32_t> mono, std::uint32_t nvars) {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < mono.size(); ++t) {
        if (mono[t] >= nvars) throw InvalidArgument("monomial variable out of range");
        if (t > 0 && mono[t - 1] > mono[t]) throw InvalidArgument("monomial indices not sorted");
        r += binom(mono[t] + t, t + 1);
    }
    return r;
}

Monomial monomial_unrank(std::uint64_t rank, std::uint32_t nvars, std::uint32_t degree) {
    if (nvars == 0) throw InvalidArgument("monomial over zero variables");
    auto s = subset_unrank(rank, nvars + degree - 1, degree);
    for (std::uint32_t t = 0; t < degree; ++t) s[t] -= t;
    return s;
}

std::vector<Monomial> all_monomials(std::uint32_t nvars, std::uint32_t degree) {
    if (nvars == 0) return degree == 0 ? std::vector<Monomial>{Monomial{}} : std::vector<Monomial>{};
    auto subsets = all_subsets(nvars + degree - 1, degree);
    for (auto& s : subsets)
        for (std::uint32_t t = 0; t < degree; ++t) s[t] -= t;
    return subsets;
}

std::vector<std::uint32_t> exponent_vector(std::span<const std::uint32_t> mono, std::uint32_t nvars) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (auto v : mono) {
        if (v >= nvars) throw InvalidArgument("monomial variable out of range");
        ++e[v];
    }
    return e;
}

Monomial times_variable(std::span<const std::uint32_t> mono, std::uint32_t var) {
    Monomial out(mono.begin(), mono.end());
    out.insert(std::upper_bound(out.begin(), out.end(), var), var);
    return out;
}

}  // namespace minrank

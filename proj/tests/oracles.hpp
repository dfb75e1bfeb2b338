#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the elimination or combinatorics code under test.

#include "minrank/field.hpp"
#include "minrank/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using minrank::Fq;
using minrank::PrimeField;

// Permutation expansion; fine up to 7 x 7.
inline Fq leibniz_det(const PrimeField& F, const std::vector<std::vector<Fq>>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t acc = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod = prod * a[i][perm[i]] % F.q();
        acc += (inversions % 2 ? -1 : 1) * static_cast<std::int64_t>(prod);
        acc %= static_cast<std::int64_t>(F.q());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return F.reduce(acc);
}

// Rank as the size of the largest nonzero minor (tiny matrices only).
inline std::size_t minor_rank(const PrimeField& F, const minrank::DenseMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    for (std::size_t k = std::min(R, C); k > 0; --k) {
        std::vector<bool> rsel(R, false), csel(C, false);
        std::fill(rsel.begin(), rsel.begin() + k, true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + k, true);
            do {
                std::vector<std::vector<Fq>> sub;
                for (std::size_t i = 0; i < R; ++i) {
                    if (!rsel[i]) continue;
                    std::vector<Fq> row;
                    for (std::size_t j = 0; j < C; ++j)
                        if (csel[j]) row.push_back(m(i, j));
                    sub.push_back(row);
                }
                if (leibniz_det(F, sub) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

// Colex comparison of equal-size increasing sequences: compare from the top.
inline bool colex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// All k-subsets of [0, n) by bitmask enumeration, sorted by colex_less.
inline std::vector<std::vector<std::uint32_t>> colex_subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != k) continue;
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask >> i & 1U) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), colex_less);
    return out;
}

// Exponent vectors of total degree d in k variables, sorted graded-colex
// (highest variable's exponent compared first).
inline std::vector<std::vector<std::uint32_t>> colex_exponents(std::uint32_t k, std::uint32_t d) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> e(k, 0);
    auto rec = [&](auto&& self, std::uint32_t i, std::uint32_t left) -> void {
        if (i + 1 == k) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (std::uint32_t v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (k > 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

}  // namespace oracle

#pragma once

#include "minrank/combinatorics.hpp"
#include "minrank/instance.hpp"
#include "minrank/matrix.hpp"
#include "minrank/support_minors.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace minrank {

// y_{k,j} has id k * n + j; x_l has id l.
enum class Universe { Y, X };

struct LinearForm {
    Universe universe = Universe::Y;
    std::map<std::uint32_t, Fq> coeffs;  // no zero values

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const LinearForm&) const = default;
};

struct SyzygyOrigin {
    enum class Kind { Sprime1, Sprime3 };
    Kind kind = Kind::Sprime1;
    std::uint32_t h1 = 0;  // the duplicated row for Sprime1
    std::uint32_t h2 = 0;  // Sprime3 only, h1 < h2
    std::vector<std::uint32_t> columns;  // the (r+2)-subset
    bool operator==(const SyzygyOrigin&) const = default;
};

/// Coefficient vector over the equation index set: entry e multiplies
/// equation e (numbered as in build_equations). Zero entries are not stored.
struct Syzygy {
    std::map<std::uint64_t, LinearForm> entries;
    SyzygyOrigin origin;
};

// Cofactor expansion of the minor on rows (h, h, C) and columns J+ along the
// first copy of row h: entry (h, J+ \ j_t) = (-1)^t y_{h, j_t}.
// m C(n, r+2) syzygies; empty when r + 2 > n.
std::vector<Syzygy> enumerate_sprime1(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t r);

// Difference of the expansions along rows h1 and h2 of the minor on rows
// (h1, h2, C) and columns J+:
//   entry (h2, J+ \ j_t) = (-1)^t y_{h1, j_t}
//   entry (h1, J+ \ j_t) = (-1)^t y_{h2, j_t}
// C(m, 2) C(n, r+2) syzygies.
std::vector<Syzygy> enumerate_sprime3(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t r);

// y_{k,j} -> sum_l M_l(k, j) x_l.
Syzygy specialize(const Syzygy& s, const MinRankInstance& inst);

// The instance with K = m n and M_{k n + j} = E_{k j}, under which
// specialization is a renaming of y_{k,j} to x_{k n + j}.
MinRankInstance identity_specialization(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t r);

// sum_e entry_e * eq_e is the zero polynomial in bidegree (2, 1).
bool check_annihilation(const PrimeField& field, std::uint32_t K, const Syzygy& s,
                        const std::vector<BilinearEquation>& eqs);

// Left kernel dimension of the Macaulay matrix at b = d + 1: syzygies whose
// entries are x-only forms of degree d.
std::size_t xonly_syzygy_dim(const MinRankInstance& inst, std::uint32_t d, const EliminationConfig& elim = {},
                             std::uint64_t cell_cap = kDefaultMatrixCap);

// Row vector of a specialized syzygy with linear entries, in the row
// numbering of the b = 2 Macaulay layout.
Vector syzygy_row_vector(const Syzygy& s, const MacaulayLayout& layout);

struct SpanReport {
    std::size_t kernel_dim = 0;        // x-only syzygies of x-degree 1
    std::size_t generators = 0;        // |S'1| + |S'3|
    std::size_t stacked_rank = 0;      // rank of the specialized generators
    bool all_annihilate = false;       // each generator lies in the left kernel
    bool spans() const { return all_annihilate && stacked_rank == kernel_dim; }
};

SpanReport sprime_span_check(const MinRankInstance& inst, const EliminationConfig& elim = {});

// sum_{i=1}^{min(m-n, n+1, b-n)} (-1)^{i-1} C(m, n+i) C(n, i-1) C(K+b-n-i-1, K-1)
BigInt submax_dim_formula(std::uint64_t m, std::uint64_t n, std::uint64_t K, std::uint64_t b);

// xonly_syzygy_dim(inst, b - 1) for r = n - 1.
std::size_t submax_dim_empirical(const MinRankInstance& inst, std::uint32_t b, const EliminationConfig& elim = {},
                                 std::uint64_t cell_cap = kDefaultMatrixCap);

// Sizes of the four families of generators of the full minor syzygy module
// and of the two y-only subfamilies.
struct GeneratorCounts {
    BigInt s1, s2, s3, s4, sprime1, sprime3;
};
GeneratorCounts generator_counts(std::uint64_t m, std::uint64_t n, std::uint64_t r);

}  // namespace minrank

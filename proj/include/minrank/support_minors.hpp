#pragma once

#include "minrank/combinatorics.hpp"
#include "minrank/instance.hpp"
#include "minrank/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minrank {

/// r-subset T of the n columns, naming the Pluecker coordinate C_{[r],T}.
struct PlueckerIndex {
    std::vector<std::uint32_t> columns;  // strictly increasing, 0-based
    std::uint64_t rank = 0;              // colex rank among r-subsets

    static PlueckerIndex from_columns(std::vector<std::uint32_t> columns, std::uint32_t n);
    static PlueckerIndex from_rank(std::uint64_t rank, std::uint32_t n, std::uint32_t r);
    bool operator==(const PlueckerIndex&) const = default;
};

struct BilinearTerm {
    std::uint32_t var;        // x-variable l
    std::uint64_t pluecker;   // colex rank of T
    Fq coeff;
    bool operator==(const BilinearTerm&) const = default;
};

/// One (r+1)-minor of the matrix stacking row i of M_x over C, on columns J,
/// expanded along its first row:
///   sum_t (-1)^t m_{i,j_t}(x) C_{J \ j_t}      (t 0-based)
/// Terms are sorted by (var, pluecker); zero coefficients are dropped.
struct BilinearEquation {
    std::uint32_t row = 0;
    std::vector<std::uint32_t> columns;  // J
    std::vector<BilinearTerm> terms;
};

// m C(n, r+1) equations ordered by (i, colex(J)). Throws InvalidArgument when
// r >= n since there are no (r+1)-subsets.
std::vector<BilinearEquation> build_equations(const MinRankInstance& inst);
std::uint64_t equation_index(std::uint32_t row, std::uint64_t subset_rank, std::uint32_t n, std::uint32_t r);

/// Row and column numbering of the Macaulay matrix at x-degree b.
///
/// Row (mu, e) with mu of degree b-1 sits at rank(mu) * E + e, where E is the
/// equation count and e the equation index. Column (nu, T) with nu of degree b
/// sits at rank(nu) * C(n, r) + rank(T).
struct MacaulayLayout {
    std::uint32_t K = 0, m = 0, n = 0, r = 0, b = 0;
    std::uint64_t row_monomials = 0;  // C(K+b-2, b-1)
    std::uint64_t equations = 0;      // m C(n, r+1)
    std::uint64_t col_monomials = 0;  // C(K+b-1, b)
    std::uint64_t plueckers = 0;      // C(n, r)

    static MacaulayLayout make(std::uint32_t K, std::uint32_t m, std::uint32_t n, std::uint32_t r, std::uint32_t b);

    std::uint64_t rows() const { return row_monomials * equations; }
    std::uint64_t cols() const { return col_monomials * plueckers; }

    std::uint64_t row_index(std::span<const std::uint32_t> mono, std::uint64_t equation) const;
    std::pair<Monomial, std::uint64_t> row_key(std::uint64_t row) const;
    std::uint64_t col_index(std::span<const std::uint32_t> mono, std::uint64_t pluecker) const;
    std::pair<Monomial, std::uint64_t> col_key(std::uint64_t col) const;
};

struct MacaulayMatrix {
    MacaulayLayout layout;
    SparseMatrix data;
};

constexpr std::uint64_t kDefaultMatrixCap = 20'000'000;

// Rows are multiples of each equation by every x-monomial of degree b-1.
// Throws CapExceeded if rows * cols exceeds `cell_cap`.
MacaulayMatrix macaulay(const MinRankInstance& inst, std::uint32_t b, std::uint64_t cell_cap = kDefaultMatrixCap);

// Entries mu(x) * c_T for every column (mu, T): the point a solution (x, C)
// occupies in the column space.
Vector evaluation_vector(const MacaulayLayout& layout, const PrimeField& field, std::span<const Fq> x,
                         std::span<const Fq> pluecker);

// Values of all r x r minors of an r x n matrix, by colex rank of the column set.
Vector pluecker_coordinates(const DenseMatrix& C);
// Pluecker vector of an r-dimensional space containing the row space of A.
// Throws InvalidArgument if rank(A) > r.
Vector row_space_pluecker(const DenseMatrix& A, std::uint32_t r);

struct RankReport {
    unsigned b = 0;
    std::uint64_t rows = 0, cols = 0;
    std::uint64_t observed_rank = 0;
    BigInt predicted;
    bool precondition_met = true;
    bool match = false;
};

// Observed rank of the Macaulay matrix against the closed form for b in {1,2}.
// The b = 2 formula presupposes precondition_met; match is reported either way.
RankReport rank_check(const MinRankInstance& inst, unsigned b, const EliminationConfig& elim = {},
                      std::uint64_t cell_cap = kDefaultMatrixCap);

struct SolveConfig {
    std::size_t kernel_cap = 8;                 // largest kernel dimension we try to search
    std::uint64_t combination_cap = 2'000'000;  // projective kernel combinations to enumerate
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t cell_cap = kDefaultMatrixCap;
    // Colex rank of T: dehomogenize with c_T = 1 and read x from that block.
    std::optional<std::uint64_t> fix_pluecker;
};

struct SolveDiagnostics {
    unsigned b = 0;
    std::uint64_t rows = 0, cols = 0, rank = 0;
    std::size_t kernel_dim = 0;
    // none | direct | combinations | pencil | enumeration | partial
    std::string strategy;
    bool complete = false;  // every solution-shaped kernel element was examined
    std::size_t candidates = 0;
    std::string message;
};

struct SolveResult {
    std::vector<SolutionCandidate> solutions;  // verified, normalized, sorted
    SolveDiagnostics diagnostics;
};

SolveResult solve_linearization(const MinRankInstance& inst, unsigned b, const SolveConfig& cfg = {});

}  // namespace minrank

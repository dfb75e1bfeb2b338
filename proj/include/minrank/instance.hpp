#pragma once

#include "minrank/field.hpp"
#include "minrank/matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace minrank {

/// K matrices M_1..M_K, each m x n over GF(q), with target rank r.
///
/// Matrices have m rows and n columns. A pencil x is a length-K vector and
/// M_x = sum_l x_l M_l.
class MinRankInstance {
public:
    MinRankInstance(PrimeField field, std::uint32_t m, std::uint32_t n, std::uint32_t r,
                    std::vector<DenseMatrix> matrices);

    const PrimeField& field() const { return field_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t K() const { return static_cast<std::uint32_t>(matrices_.size()); }
    std::uint32_t r() const { return r_; }
    const std::vector<DenseMatrix>& matrices() const { return matrices_; }
    const DenseMatrix& matrix(std::size_t l) const { return matrices_.at(l); }

    // Coefficient of x_l in entry (k, j) of M_x.
    Fq coeff(std::size_t l, std::size_t k, std::size_t j) const { return matrices_[l](k, j); }

    bool operator==(const MinRankInstance& o) const {
        return field_ == o.field_ && m_ == o.m_ && n_ == o.n_ && r_ == o.r_ && matrices_ == o.matrices_;
    }

private:
    PrimeField field_;
    std::uint32_t m_, n_, r_;
    std::vector<DenseMatrix> matrices_;
};

// x != 0 scaled so its first nonzero coordinate is 1.
struct SolutionCandidate {
    Vector x;
    std::size_t achieved_rank = 0;
    bool operator==(const SolutionCandidate&) const = default;
};

// Scales x so that its first nonzero coordinate is 1. Throws on x = 0.
Vector normalize_projective(const PrimeField& field, Vector x);

DenseMatrix evaluate_pencil(const MinRankInstance& inst, std::span<const Fq> x);

struct PlantedInstance {
    MinRankInstance instance;
    Vector witness;
};

// M_1..M_{K-1} uniform; x* uniform with x*_K != 0; M_K solved so that
// M_{x*} = U V for uniform U (m x r), V (r x n). Draw order: matrices
// row-major, then x*_1..x*_K, then U, then V.
PlantedInstance gen_planted(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t K,
                            std::uint32_t r, std::uint64_t seed);

// All K matrices uniform, drawn row-major in order.
MinRankInstance gen_random(const PrimeField& field, std::uint32_t m, std::uint32_t n, std::uint32_t K,
                           std::uint32_t r, std::uint64_t seed);

// True iff M_x != 0 and rank(M_x) <= r.
bool verify_solution(const MinRankInstance& inst, std::span<const Fq> x, std::uint32_t r);

constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

// (q^K - 1) / (q - 1), saturating at UINT64_MAX.
std::uint64_t projective_point_count(std::uint32_t q, std::uint32_t K);

// Every normalized x with 0 < rank(M_x) <= r, in lexicographic order.
// Throws CapExceeded when the projective space is larger than `cap`.
std::vector<SolutionCandidate> brute_force_solve(const MinRankInstance& inst, std::uint32_t r,
                                                 std::uint64_t cap = kDefaultEnumerationCap);

// Rank-metric decoding as MinRank: the instance (M_1, ..., M_K, M_0).
MinRankInstance decoding_to_minrank(const DenseMatrix& received, const std::vector<DenseMatrix>& basis,
                                    std::uint32_t radius);
// For a solution (x_1..x_K, lambda) with lambda != 0, the codeword
// coefficients -lambda^{-1} (x_1..x_K). None when lambda = 0.
std::optional<Vector> decoding_coefficients(const PrimeField& field, std::span<const Fq> solution);

// "minrank v1" text format.
void write_instance(std::ostream& os, const MinRankInstance& inst);
std::string format_instance(const MinRankInstance& inst);
MinRankInstance read_instance(std::istream& is);
MinRankInstance parse_instance(const std::string& text);

// Witness sidecar: "minrank-witness v1", "q <q>", "K <K>", "x <x_1> ... <x_K>".
void write_witness(std::ostream& os, const PrimeField& field, std::span<const Fq> x);
Vector read_witness(std::istream& is, const PrimeField& field);

}  // namespace minrank

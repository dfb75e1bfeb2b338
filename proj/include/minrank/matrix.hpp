#pragma once

#include "minrank/field.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace minrank {

using Vector = std::vector<Fq>;

/// Row-major dense matrix over a prime field.
class DenseMatrix {
public:
    DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols);
    // Entries are taken as given and must already lie in [0, q).
    DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Fq> entries);

    static DenseMatrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Fq operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Fq& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Fq> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Fq> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Fq>& entries() const { return data_; }

    bool is_zero() const;
    DenseMatrix transpose() const;

    bool operator==(const DenseMatrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Fq> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scale(const DenseMatrix& a, Fq s);
Vector operator*(const DenseMatrix& a, std::span<const Fq> v);

struct SparseEntry {
    std::uint32_t col;
    Fq value;
    bool operator==(const SparseEntry&) const = default;
};

using SparseRow = std::vector<SparseEntry>;

/// Row-wise sparse matrix. Column indices within a row are strictly increasing
/// and no zero is stored.
class SparseMatrix {
public:
    SparseMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    static SparseMatrix from_dense(const DenseMatrix& d);
    DenseMatrix to_dense() const;

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    const SparseRow& row(std::size_t i) const { return rows_[i]; }
    // Validates ordering, range and nonzero-ness.
    void set_row(std::size_t i, SparseRow row);

    bool operator==(const SparseMatrix& o) const {
        return field_ == o.field_ && cols_ == o.cols_ && rows_ == o.rows_;
    }

private:
    PrimeField field_;
    std::size_t cols_;
    std::vector<SparseRow> rows_;
};

Vector operator*(const SparseMatrix& a, std::span<const Fq> v);
// v^T * A
Vector left_multiply(std::span<const Fq> v, const SparseMatrix& a);

struct RrefResult {
    std::size_t rank;
    DenseMatrix reduced;
    std::vector<std::size_t> pivots;
};

// Unique reduced row echelon form; pivots chosen as the first nonzero in
// column order so the result is bit-reproducible.
RrefResult rref(const DenseMatrix& m);

struct EliminationConfig {
    // Matrices with at most this many cells are eliminated densely; larger
    // ones go through sparse elimination with Markowitz pivoting.
    std::size_t dense_threshold = std::size_t{1} << 18;
};

std::size_t rank(const DenseMatrix& m);
std::size_t rank(const SparseMatrix& m, const EliminationConfig& cfg = {});
// Sparse elimination regardless of size.
std::size_t sparse_rank(const SparseMatrix& m);

// Basis of {v : M v = 0}: one vector per non-pivot column f, with v_f = 1 and
// v_p = -R(i, f) at the pivot columns, ordered by f.
std::vector<Vector> right_kernel_basis(const DenseMatrix& m);

std::size_t left_kernel_dim(const DenseMatrix& m);
std::size_t left_kernel_dim(const SparseMatrix& m, const EliminationConfig& cfg = {});

// Rows stacked into a dense matrix; all vectors must share the same length.
DenseMatrix stack_rows(const PrimeField& field, std::span<const Vector> rows, std::size_t cols);

}  // namespace minrank

namespace minrank {

// Determinant of a square matrix by elimination.
Fq determinant(const DenseMatrix& m);

}  // namespace minrank

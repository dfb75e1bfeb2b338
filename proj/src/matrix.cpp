#include "minrank/matrix.hpp"

#include "minrank/error.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

namespace minrank {

DenseMatrix::DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

DenseMatrix::DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Fq> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw InvalidArgument("dense matrix: entry count does not match shape");
    for (Fq v : data_)
        if (v >= field_.q()) throw InvalidArgument("dense matrix: entry not reduced mod q");
}

DenseMatrix DenseMatrix::identity(PrimeField field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool DenseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Fq v) { return v == 0; });
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field())) throw InvalidArgument("matrix product: shape mismatch");
    const auto& F = a.field();
    DenseMatrix c(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Fq aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.mul_add(c(i, j), aik, b(k, j));
        }
    return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field()))
        throw InvalidArgument("matrix sum: shape mismatch");
    DenseMatrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

DenseMatrix scale(const DenseMatrix& a, Fq s) {
    DenseMatrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(a(i, j), s);
    return c;
}

Vector operator*(const DenseMatrix& a, std::span<const Fq> v) {
    if (v.size() != a.cols()) throw InvalidArgument("matrix-vector product: length mismatch");
    Vector out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Fq acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc = a.field().mul_add(acc, a(i, j), v[j]);
        out[i] = acc;
    }
    return out;
}

SparseMatrix::SparseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d) {
    SparseMatrix s(d.field(), d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        SparseRow row;
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d(i, j) != 0) row.push_back({static_cast<std::uint32_t>(j), d(i, j)});
        s.rows_[i] = std::move(row);
    }
    return s;
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix d(field_, rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (const auto& e : rows_[i]) d(i, e.col) = e.value;
    return d;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

void SparseMatrix::set_row(std::size_t i, SparseRow row) {
    if (i >= rows_.size()) throw InvalidArgument("sparse matrix: row index out of range");
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k].col >= cols_) throw InvalidArgument("sparse matrix: column index out of range");
        if (row[k].value == 0 || row[k].value >= field_.q()) throw InvalidArgument("sparse matrix: bad stored value");
        if (k > 0 && row[k - 1].col >= row[k].col) throw InvalidArgument("sparse matrix: columns not increasing");
    }
    rows_[i] = std::move(row);
}

Vector operator*(const SparseMatrix& a, std::span<const Fq> v) {
    if (v.size() != a.cols()) throw InvalidArgument("matrix-vector product: length mismatch");
    Vector out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Fq acc = 0;
        for (const auto& e : a.row(i)) acc = a.field().mul_add(acc, e.value, v[e.col]);
        out[i] = acc;
    }
    return out;
}

Vector left_multiply(std::span<const Fq> v, const SparseMatrix& a) {
    if (v.size() != a.rows()) throw InvalidArgument("vector-matrix product: length mismatch");
    Vector out(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (v[i] == 0) continue;
        for (const auto& e : a.row(i)) out[e.col] = a.field().mul_add(out[e.col], v[i], e.value);
    }
    return out;
}

namespace {

// Forward (or full, when `reduce_above`) Gauss-Jordan on a row-major buffer.
std::vector<std::size_t> eliminate(const PrimeField& F, std::vector<Fq>& a, std::size_t rows, std::size_t cols,
                                   bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(p * cols),
                             a.begin() + static_cast<std::ptrdiff_t>((p + 1) * cols),
                             a.begin() + static_cast<std::ptrdiff_t>(r * cols));
        Fq* prow = a.data() + r * cols;
        Fq inv = F.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
        for (std::size_t i = reduce_above ? 0 : r + 1; i < rows; ++i) {
            if (i == r) continue;
            Fq* row = a.data() + i * cols;
            Fq f = row[c];
            if (f == 0) continue;
            Fq nf = F.neg(f);
            for (std::size_t j = c; j < cols; ++j)
                if (prow[j] != 0) row[j] = F.mul_add(row[j], nf, prow[j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// dst += f * src over sorted sparse rows.
SparseRow axpy(const PrimeField& F, const SparseRow& dst, Fq f, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].col < dst[i].col) {
            out.push_back({src[j].col, F.mul(f, src[j].value)});
            ++j;
        } else {
            Fq v = F.mul_add(dst[i].value, f, src[j].value);
            if (v != 0) out.push_back({dst[i].col, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

RrefResult rref(const DenseMatrix& m) {
    std::vector<Fq> a = m.entries();
    auto pivots = eliminate(m.field(), a, m.rows(), m.cols(), true);
    std::size_t rk = pivots.size();
    return {rk, DenseMatrix(m.field(), m.rows(), m.cols(), std::move(a)), std::move(pivots)};
}

std::size_t rank(const DenseMatrix& m) {
    std::vector<Fq> a = m.entries();
    return eliminate(m.field(), a, m.rows(), m.cols(), false).size();
}

std::size_t sparse_rank(const SparseMatrix& m) {
    const auto& F = m.field();
    std::vector<SparseRow> active;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m.row(i).empty()) active.push_back(m.row(i));

    std::vector<std::size_t> col_count(m.cols());
    std::size_t rk = 0;
    while (!active.empty()) {
        std::fill(col_count.begin(), col_count.end(), 0);
        for (const auto& row : active)
            for (const auto& e : row) ++col_count[e.col];

        // Markowitz cost (row weight - 1) * (column count - 1); ties broken by
        // position so the elimination order is deterministic.
        std::size_t best_row = 0, best_pos = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < active.size() && best_cost > 0; ++i) {
            std::size_t w = active[i].size() - 1;
            for (std::size_t k = 0; k < active[i].size(); ++k) {
                std::size_t cost = w * (col_count[active[i][k].col] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = i;
                    best_pos = k;
                }
            }
        }

        SparseRow pivot = std::move(active[best_row]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_row));
        const std::uint32_t pc = pivot[best_pos].col;
        const Fq inv = F.inv(pivot[best_pos].value);

        std::vector<SparseRow> next;
        next.reserve(active.size());
        for (auto& row : active) {
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const SparseEntry& e, std::uint32_t c) { return e.col < c; });
            if (it != row.end() && it->col == pc) {
                Fq f = F.neg(F.mul(it->value, inv));
                SparseRow reduced = axpy(F, row, f, pivot);
                if (!reduced.empty()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(row));
            }
        }
        active = std::move(next);
        ++rk;
    }
    return rk;
}

std::size_t rank(const SparseMatrix& m, const EliminationConfig& cfg) {
    if (m.rows() * m.cols() <= cfg.dense_threshold) return rank(m.to_dense());
    return sparse_rank(m);
}

std::vector<Vector> right_kernel_basis(const DenseMatrix& m) {
    auto r = rref(m);
    const auto& F = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = F.neg(r.reduced(i, f));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t left_kernel_dim(const DenseMatrix& m) { return m.rows() - rank(m); }

std::size_t left_kernel_dim(const SparseMatrix& m, const EliminationConfig& cfg) { return m.rows() - rank(m, cfg); }

DenseMatrix stack_rows(const PrimeField& field, std::span<const Vector> rows, std::size_t cols) {
    std::vector<Fq> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw InvalidArgument("stack_rows: length mismatch");
        data.insert(data.end(), r.begin(), r.end());
    }
    return DenseMatrix(field, rows.size(), cols, std::move(data));
}

}  // namespace minrank

namespace minrank {

Fq determinant(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant: matrix is not square");
    const auto& F = m.field();
    const std::size_t n = m.rows();
    std::vector<Fq> a = m.entries();
    Fq det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p * n + c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
            det = F.neg(det);
        }
        Fq piv = a[c * n + c];
        det = F.mul(det, piv);
        Fq inv = F.inv(piv);
        for (std::size_t i = c + 1; i < n; ++i) {
            Fq f = F.neg(F.mul(a[i * n + c], inv));
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = F.mul_add(a[i * n + j], f, a[c * n + j]);
        }
    }
    return det;
}

}  // namespace minrank

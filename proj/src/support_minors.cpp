#include "minrank/support_minors.hpp"

#include "minrank/error.hpp"
#include "minrank/estimator.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace minrank {

PlueckerIndex PlueckerIndex::from_columns(std::vector<std::uint32_t> columns, std::uint32_t n) {
    std::uint64_t rk = subset_rank(columns, n);
    return {std::move(columns), rk};
}

PlueckerIndex PlueckerIndex::from_rank(std::uint64_t rank, std::uint32_t n, std::uint32_t r) {
    return {subset_unrank(rank, n, r), rank};
}

std::uint64_t equation_index(std::uint32_t row, std::uint64_t subset_rank, std::uint32_t n, std::uint32_t r) {
    return static_cast<std::uint64_t>(row) * binom(n, r + 1) + subset_rank;
}

std::vector<BilinearEquation> build_equations(const MinRankInstance& inst) {
    const auto& F = inst.field();
    const std::uint32_t n = inst.n(), r = inst.r();
    if (r >= n) throw InvalidArgument("support minors: r = n leaves no (r+1)-column minors");

    const auto subsets = all_subsets(n, r + 1);
    std::vector<BilinearEquation> eqs;
    eqs.reserve(static_cast<std::size_t>(inst.m()) * subsets.size());
    std::vector<std::uint32_t> T(r);
    for (std::uint32_t i = 0; i < inst.m(); ++i) {
        for (const auto& J : subsets) {
            BilinearEquation eq{i, J, {}};
            for (std::uint32_t t = 0; t <= r; ++t) {
                std::copy(J.begin(), J.begin() + t, T.begin());
                std::copy(J.begin() + t + 1, J.end(), T.begin() + t);
                const std::uint64_t tr = subset_rank(T, n);
                const Fq sign = F.sign(t);
                for (std::uint32_t l = 0; l < inst.K(); ++l) {
                    Fq c = F.mul(sign, inst.coeff(l, i, J[t]));
                    if (c != 0) eq.terms.push_back({l, tr, c});
                }
            }
            std::sort(eq.terms.begin(), eq.terms.end(), [](const BilinearTerm& a, const BilinearTerm& b) {
                return a.var != b.var ? a.var < b.var : a.pluecker < b.pluecker;
            });
            eqs.push_back(std::move(eq));
        }
    }
    return eqs;
}

MacaulayLayout MacaulayLayout::make(std::uint32_t K, std::uint32_t m, std::uint32_t n, std::uint32_t r,
                                    std::uint32_t b) {
    if (b == 0) throw InvalidArgument("macaulay: b must be >= 1");
    MacaulayLayout L;
    L.K = K;
    L.m = m;
    L.n = n;
    L.r = r;
    L.b = b;
    L.row_monomials = monomial_count(K, b - 1);
    L.equations = checked_mul(m, binom(n, r + 1));
    L.col_monomials = monomial_count(K, b);
    L.plueckers = binom(n, r);
    checked_mul(checked_mul(L.row_monomials, L.equations), checked_mul(L.col_monomials, L.plueckers));
    return L;
}

std::uint64_t MacaulayLayout::row_index(std::span<const std::uint32_t> mono, std::uint64_t equation) const {
    if (mono.size() + 1 != b || equation >= equations) throw InvalidArgument("macaulay: bad row key");
    return monomial_rank(mono, K) * equations + equation;
}

std::pair<Monomial, std::uint64_t> MacaulayLayout::row_key(std::uint64_t row) const {
    if (row >= rows()) throw InvalidArgument("macaulay: row out of range");
    return {monomial_unrank(row / equations, K, b - 1), row % equations};
}

std::uint64_t MacaulayLayout::col_index(std::span<const std::uint32_t> mono, std::uint64_t pluecker) const {
    if (mono.size() != b || pluecker >= plueckers) throw InvalidArgument("macaulay: bad column key");
    return monomial_rank(mono, K) * plueckers + pluecker;
}

std::pair<Monomial, std::uint64_t> MacaulayLayout::col_key(std::uint64_t col) const {
    if (col >= cols()) throw InvalidArgument("macaulay: column out of range");
    return {monomial_unrank(col / plueckers, K, b), col % plueckers};
}

MacaulayMatrix macaulay(const MinRankInstance& inst, std::uint32_t b, std::uint64_t cell_cap) {
    const auto eqs = build_equations(inst);
    auto L = MacaulayLayout::make(inst.K(), inst.m(), inst.n(), inst.r(), b);
    if (checked_mul(L.rows(), L.cols()) > cell_cap)
        throw CapExceeded("macaulay: " + std::to_string(L.rows()) + " x " + std::to_string(L.cols()) +
                          " exceeds the matrix cap of " + std::to_string(cell_cap) + " cells");

    SparseMatrix data(inst.field(), L.rows(), L.cols());
    const auto row_monos = all_monomials(inst.K(), b - 1);
    // rank(mu * x_l) for every row monomial mu and variable l
    std::vector<std::uint64_t> shifted(row_monos.size() * inst.K());
    for (std::size_t a = 0; a < row_monos.size(); ++a)
        for (std::uint32_t l = 0; l < inst.K(); ++l)
            shifted[a * inst.K() + l] = monomial_rank(times_variable(row_monos[a], l), inst.K());

    for (std::size_t a = 0; a < row_monos.size(); ++a) {
        for (std::size_t e = 0; e < eqs.size(); ++e) {
            SparseRow row;
            row.reserve(eqs[e].terms.size());
            for (const auto& term : eqs[e].terms) {
                auto col = shifted[a * inst.K() + term.var] * L.plueckers + term.pluecker;
                row.push_back({static_cast<std::uint32_t>(col), term.coeff});
            }
            std::sort(row.begin(), row.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.col < y.col; });
            data.set_row(a * eqs.size() + e, std::move(row));
        }
    }
    return {L, std::move(data)};
}

namespace {

Vector monomial_values(const PrimeField& F, std::span<const Fq> x, std::uint32_t degree) {
    const auto monos = all_monomials(static_cast<std::uint32_t>(x.size()), degree);
    Vector out;
    out.reserve(monos.size());
    for (const auto& mu : monos) {
        Fq v = 1;
        for (auto l : mu) v = F.mul(v, x[l]);
        out.push_back(v);
    }
    return out;
}

}  // namespace

Vector evaluation_vector(const MacaulayLayout& L, const PrimeField& F, std::span<const Fq> x,
                         std::span<const Fq> pluecker) {
    if (x.size() != L.K || pluecker.size() != L.plueckers) throw InvalidArgument("evaluation vector: length mismatch");
    const Vector mv = monomial_values(F, x, L.b);
    Vector out(L.cols());
    for (std::size_t a = 0; a < mv.size(); ++a)
        for (std::size_t t = 0; t < pluecker.size(); ++t) out[a * L.plueckers + t] = F.mul(mv[a], pluecker[t]);
    return out;
}

Vector pluecker_coordinates(const DenseMatrix& C) {
    const auto r = static_cast<std::uint32_t>(C.rows());
    const auto n = static_cast<std::uint32_t>(C.cols());
    Vector out;
    for (const auto& T : all_subsets(n, r)) {
        DenseMatrix sub(C.field(), r, r);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j) sub(i, j) = C(i, T[j]);
        out.push_back(determinant(sub));
    }
    return out;
}

Vector row_space_pluecker(const DenseMatrix& A, std::uint32_t r) {
    auto red = rref(A);
    if (red.rank > r) throw InvalidArgument("row space has dimension above r");
    DenseMatrix C(A.field(), r, A.cols());
    for (std::size_t i = 0; i < red.rank; ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = red.reduced(i, j);
    // Complete with unit vectors on non-pivot columns.
    std::size_t next = red.rank;
    for (std::size_t j = 0; j < A.cols() && next < r; ++j) {
        if (std::find(red.pivots.begin(), red.pivots.end(), j) != red.pivots.end()) continue;
        C(next++, j) = 1;
    }
    return pluecker_coordinates(C);
}

RankReport rank_check(const MinRankInstance& inst, unsigned b, const EliminationConfig& elim, std::uint64_t cell_cap) {
    if (b != 1 && b != 2) throw InvalidArgument("rank_check: b must be 1 or 2");
    auto mac = macaulay(inst, b, cell_cap);
    RankReport rep;
    rep.b = b;
    rep.rows = mac.layout.rows();
    rep.cols = mac.layout.cols();
    rep.observed_rank = rank(mac.data, elim);
    ParameterSet p{inst.m(), inst.n(), inst.K(), inst.r(), inst.field().q()};
    if (b == 1) {
        rep.predicted = eqs_b1(p);
    } else {
        auto c = eqs_b2(p);
        rep.predicted = c.count;
        rep.precondition_met = c.precondition_met;
    }
    rep.match = BigInt(rep.observed_rank) == rep.predicted;
    return rep;
}

namespace {

class Extractor {
public:
    Extractor(const MacaulayLayout& L, const PrimeField& F, std::optional<std::uint64_t> fixed)
        : L_(L), F_(F), fixed_(fixed) {
        const auto lower = all_monomials(L.K, L.b - 1);
        lift_.reserve(lower.size());
        for (const auto& mu : lower) {
            std::vector<std::uint64_t> idx(L.K);
            for (std::uint32_t k = 0; k < L.K; ++k) idx[k] = monomial_rank(times_variable(mu, k), L.K);
            lift_.push_back(std::move(idx));
        }
    }

    // Reads x from a kernel element of shape mono_b(x) (x) c. Without a fixed
    // Pluecker block the element must factor exactly; with one, x is read off
    // the c_T block alone.
    std::optional<Vector> from_vector(std::span<const Fq> v) const {
        const std::size_t P = L_.plueckers, M = L_.col_monomials;
        auto at = [&](std::size_t a, std::size_t t) { return v[a * P + t]; };
        Vector w(M);
        if (fixed_) {
            for (std::size_t a = 0; a < M; ++a) w[a] = at(a, *fixed_);
            return x_from_monomials(w);
        }
        std::size_t t0 = 0;
        for (; t0 < P; ++t0) {
            bool nz = false;
            for (std::size_t a = 0; a < M && !nz; ++a) nz = at(a, t0) != 0;
            if (nz) break;
        }
        if (t0 == P) return std::nullopt;
        for (std::size_t a = 0; a < M; ++a) w[a] = at(a, t0);
        std::size_t a0 = 0;
        while (w[a0] == 0) ++a0;
        const Fq inv = F_.inv(w[a0]);
        for (std::size_t t = 0; t < P; ++t) {
            Fq c = F_.mul(at(a0, t), inv);
            for (std::size_t a = 0; a < M; ++a)
                if (at(a, t) != F_.mul(c, w[a])) return std::nullopt;
        }
        return x_from_monomials(w);
    }

    // w proportional to the degree-b monomial values of some x.
    std::optional<Vector> x_from_monomials(std::span<const Fq> w) const {
        for (const auto& idx : lift_) {
            Vector x(L_.K);
            bool nz = false;
            for (std::uint32_t k = 0; k < L_.K; ++k) {
                x[k] = w[idx[k]];
                nz = nz || x[k] != 0;
            }
            if (!nz) continue;
            const Vector mv = monomial_values(F_, x, L_.b);
            std::size_t a0 = 0;
            while (a0 < w.size() && w[a0] == 0) ++a0;
            if (a0 == w.size() || mv[a0] == 0) return std::nullopt;
            const Fq s = F_.mul(w[a0], F_.inv(mv[a0]));
            for (std::size_t a = 0; a < w.size(); ++a)
                if (w[a] != F_.mul(s, mv[a])) return std::nullopt;
            return x;
        }
        return std::nullopt;
    }

private:
    const MacaulayLayout& L_;
    const PrimeField& F_;
    std::optional<std::uint64_t> fixed_;
    std::vector<std::vector<std::uint64_t>> lift_;
};

// Visits every normalized vector of length d (projective points of P^{d-1}),
// lexicographic order; stops early when fn returns false.
template <class Fn>
void for_each_projective(const PrimeField& F, std::size_t d, Fn&& fn) {
    for (std::size_t p = d; p-- > 0;) {
        Vector lam(d, 0);
        lam[p] = 1;
        for (;;) {
            if (!fn(lam)) return;
            bool carry = true;
            for (std::size_t i = d; carry && i > p + 1;) {
                --i;
                if (++lam[i] == F.q())
                    lam[i] = 0;
                else
                    carry = false;
            }
            if (carry) break;
        }
    }
}

Vector combine(const PrimeField& F, const std::vector<Vector>& basis, std::span<const Fq> lam) {
    Vector v(basis.front().size(), 0);
    for (std::size_t a = 0; a < basis.size(); ++a) {
        if (lam[a] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.mul_add(v[j], lam[a], basis[a][j]);
    }
    return v;
}

struct Quadratic {
    Fq c0, c1, c2;
};

// First 2x2 minor of A0 + t A1 (as a polynomial in t) that is not identically
// zero, where both are (monomial x Pluecker) reshapes.
std::optional<Quadratic> first_nonzero_minor(const PrimeField& F, const MacaulayLayout& L, const Vector& w0,
                                             const Vector& w1) {
    const std::size_t P = L.plueckers, M = L.col_monomials;
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t i2 = i + 1; i2 < M; ++i2)
            for (std::size_t j = 0; j < P; ++j)
                for (std::size_t j2 = j + 1; j2 < P; ++j2) {
                    Fq a0 = w0[i * P + j], a1 = w1[i * P + j];
                    Fq b0 = w0[i * P + j2], b1 = w1[i * P + j2];
                    Fq c0 = w0[i2 * P + j], c1 = w1[i2 * P + j];
                    Fq d0 = w0[i2 * P + j2], d1 = w1[i2 * P + j2];
                    Quadratic qd{F.sub(F.mul(a0, d0), F.mul(b0, c0)),
                                 F.sub(F.add(F.mul(a0, d1), F.mul(a1, d0)), F.add(F.mul(b0, c1), F.mul(b1, c0))),
                                 F.sub(F.mul(a1, d1), F.mul(b1, c1))};
                    if (qd.c0 || qd.c1 || qd.c2) return qd;
                }
    return std::nullopt;
}

std::vector<Fq> roots(const PrimeField& F, const Quadratic& p) {
    if (p.c2 == 0) {
        if (p.c1 == 0) return {};
        return {F.mul(F.neg(p.c0), F.inv(p.c1))};
    }
    if (F.q() == 2) {
        std::vector<Fq> out;
        for (Fq t : {0U, 1U})
            if (F.add(F.add(p.c0, F.mul(p.c1, t)), F.mul(p.c2, F.mul(t, t))) == 0) out.push_back(t);
        return out;
    }
    Fq disc = F.sub(F.mul(p.c1, p.c1), F.mul(4 % F.q(), F.mul(p.c2, p.c0)));
    auto s = sqrt(F, disc);
    if (!s) return {};
    Fq inv2a = F.inv(F.mul(2, p.c2));
    Fq r1 = F.mul(F.sub(*s, p.c1), inv2a);
    Fq r2 = F.mul(F.sub(F.neg(*s), p.c1), inv2a);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

// x admits a Pluecker partner c != 0 with mono_b(x) (x) c in the kernel.
bool has_partner(const MacaulayMatrix& mac, const PrimeField& F, std::span<const Fq> x) {
    const auto& L = mac.layout;
    const Vector mv = monomial_values(F, x, L.b);
    DenseMatrix A(F, L.rows(), L.plueckers);
    for (std::size_t i = 0; i < mac.data.rows(); ++i)
        for (const auto& e : mac.data.row(i)) {
            auto a = e.col / L.plueckers, t = e.col % L.plueckers;
            if (mv[a] != 0) A(i, t) = F.mul_add(A(i, t), e.value, mv[a]);
        }
    return rank(A) < L.plueckers;
}

}  // namespace

SolveResult solve_linearization(const MinRankInstance& inst, unsigned b, const SolveConfig& cfg) {
    if (b != 1 && b != 2) throw InvalidArgument("solve: b must be 1 or 2");
    const auto& F = inst.field();
    auto mac = macaulay(inst, b, cfg.cell_cap);
    const auto& L = mac.layout;
    if (cfg.fix_pluecker && *cfg.fix_pluecker >= L.plueckers)
        throw InvalidArgument("solve: fixed Pluecker index out of range");

    SolveResult res;
    auto& diag = res.diagnostics;
    diag.b = b;
    diag.rows = L.rows();
    diag.cols = L.cols();

    const auto kernel = right_kernel_basis(mac.data.to_dense());
    diag.kernel_dim = kernel.size();
    diag.rank = L.cols() - kernel.size();

    std::set<Vector> candidates;
    Extractor ex(L, F, cfg.fix_pluecker);
    auto take = [&](std::span<const Fq> v) {
        if (auto x = ex.from_vector(v)) candidates.insert(normalize_projective(F, *x));
    };
    const std::size_t d = kernel.size();
    const bool enumerable = projective_point_count(F.q(), inst.K()) <= cfg.enumeration_cap;

    if (d == 0) {
        diag.strategy = "none";
        diag.complete = true;
    } else if (d == 1) {
        diag.strategy = "direct";
        diag.complete = true;
        take(kernel.front());
    } else if (d <= cfg.kernel_cap && projective_point_count(F.q(), static_cast<std::uint32_t>(d)) <= cfg.combination_cap) {
        diag.strategy = "combinations";
        diag.complete = true;
        for_each_projective(F, d, [&](const Vector& lam) {
            take(combine(F, kernel, lam));
            return true;
        });
    } else if (d == 2 && !cfg.fix_pluecker) {
        diag.strategy = "pencil";
        take(kernel[1]);
        if (auto quad = first_nonzero_minor(F, L, kernel[0], kernel[1])) {
            for (Fq t : roots(F, *quad)) {
                Fq lam[2] = {1, t};
                take(combine(F, kernel, lam));
            }
            diag.complete = true;
        } else {
            // Every combination factors; complete only if x stays fixed.
            take(kernel[0]);
            Fq one[2] = {1, 1};
            take(combine(F, kernel, one));
            diag.complete = candidates.size() <= 1;
            if (!diag.complete) diag.message = "kernel is a pencil of factorable elements with varying x";
        }
    } else if (enumerable) {
        diag.strategy = "enumeration";
        diag.complete = true;
        for_each_projective(F, inst.K(), [&](const Vector& x) {
            if (has_partner(mac, F, x)) candidates.insert(x);
            return true;
        });
    } else {
        diag.strategy = "partial";
        for (const auto& v : kernel) take(v);
        diag.message = "kernel dimension " + std::to_string(d) + " too large to search exhaustively";
    }
    if (d > cfg.kernel_cap && diag.strategy == "enumeration")
        diag.message = "kernel dimension " + std::to_string(d) + " above extraction cap; searched x directly";

    diag.candidates = candidates.size();
    for (const auto& x : candidates) {
        DenseMatrix Mx = evaluate_pencil(inst, x);
        if (Mx.is_zero()) continue;
        auto rk = rank(Mx);
        if (rk <= inst.r()) res.solutions.push_back({x, rk});
    }
    if (res.solutions.empty() && diag.message.empty())
        diag.message = "no solution extracted at b=" + std::to_string(b);
    return res;
}

}  // namespace minrank

#include "minrank/syzygy.hpp"

#include "minrank/error.hpp"

#include <algorithm>

namespace minrank {

namespace {

std::vector<std::uint32_t> without(const std::vector<std::uint32_t>& J, std::size_t t) {
    std::vector<std::uint32_t> out;
    out.reserve(J.size() - 1);
    for (std::size_t i = 0; i < J.size(); ++i)
        if (i != t) out.push_back(J[i]);
    return out;
}

void add_term(LinearForm& f, const PrimeField& F, std::uint32_t var, Fq c) {
    if (c == 0) return;
    auto [it, inserted] = f.coeffs.emplace(var, c);
    if (!inserted) {
        it->second = F.add(it->second, c);
        if (it->second == 0) f.coeffs.erase(it);
    }
}

// (h, J+ \ j_t) <- (-1)^t y_{k, j_t} for every t
void expand_row(Syzygy& s, const PrimeField& F, std::uint32_t n, std::uint32_t r, std::uint32_t h, std::uint32_t k,
                const std::vector<std::uint32_t>& Jplus) {
    for (std::size_t t = 0; t < Jplus.size(); ++t) {
        auto e = equation_index(h, subset_rank(without(Jplus, t), n), n, r);
        auto& form = s.entries[e];
        form.universe = Universe::Y;
        add_term(form, F, k * n + Jplus[t], F.sign(t));
    }
}

}  // namespace

std::vector<Syzygy> enumerate_sprime1(const PrimeField& F, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    std::vector<Syzygy> out;
    if (r + 2 > n) return out;
    const auto subsets = all_subsets(n, r + 2);
    for (std::uint32_t h = 0; h < m; ++h)
        for (const auto& Jp : subsets) {
            Syzygy s;
            s.origin = {SyzygyOrigin::Kind::Sprime1, h, h, Jp};
            expand_row(s, F, n, r, h, h, Jp);
            out.push_back(std::move(s));
        }
    return out;
}

std::vector<Syzygy> enumerate_sprime3(const PrimeField& F, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    std::vector<Syzygy> out;
    if (r + 2 > n || m < 2) return out;
    const auto subsets = all_subsets(n, r + 2);
    for (std::uint32_t h1 = 0; h1 < m; ++h1)
        for (std::uint32_t h2 = h1 + 1; h2 < m; ++h2)
            for (const auto& Jp : subsets) {
                Syzygy s;
                s.origin = {SyzygyOrigin::Kind::Sprime3, h1, h2, Jp};
                expand_row(s, F, n, r, h2, h1, Jp);
                expand_row(s, F, n, r, h1, h2, Jp);
                out.push_back(std::move(s));
            }
    return out;
}

Syzygy specialize(const Syzygy& s, const MinRankInstance& inst) {
    const auto& F = inst.field();
    const std::uint32_t n = inst.n();
    Syzygy out;
    out.origin = s.origin;
    for (const auto& [e, form] : s.entries) {
        if (form.universe != Universe::Y) throw InvalidArgument("specialize: entry is not a y-form");
        LinearForm x{Universe::X, {}};
        for (const auto& [id, c] : form.coeffs) {
            const std::uint32_t k = id / n, j = id % n;
            if (k >= inst.m()) throw InvalidArgument("specialize: y-variable outside the instance");
            for (std::uint32_t l = 0; l < inst.K(); ++l) add_term(x, F, l, F.mul(c, inst.coeff(l, k, j)));
        }
        if (!x.is_zero()) out.entries.emplace(e, std::move(x));
    }
    return out;
}

MinRankInstance identity_specialization(const PrimeField& F, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    std::vector<DenseMatrix> mats;
    for (std::uint32_t k = 0; k < m; ++k)
        for (std::uint32_t j = 0; j < n; ++j) {
            DenseMatrix E(F, m, n);
            E(k, j) = 1;
            mats.push_back(std::move(E));
        }
    return MinRankInstance(F, m, n, r, std::move(mats));
}

bool check_annihilation(const PrimeField& F, std::uint32_t K, const Syzygy& s,
                        const std::vector<BilinearEquation>& eqs) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, Fq> acc;
    for (const auto& [e, form] : s.entries) {
        if (form.universe != Universe::X) throw InvalidArgument("check_annihilation: syzygy is not specialized");
        if (e >= eqs.size()) throw InvalidArgument("check_annihilation: entry outside the equation set");
        for (const auto& [a, alpha] : form.coeffs) {
            if (a >= K) throw InvalidArgument("check_annihilation: x-variable out of range");
            for (const auto& term : eqs[e].terms) {
                const std::uint32_t lo = std::min(a, term.var), hi = std::max(a, term.var);
                const std::uint32_t mono[2] = {lo, hi};
                auto& slot = acc[{monomial_rank(mono, K), term.pluecker}];
                slot = F.mul_add(slot, alpha, term.coeff);
            }
        }
    }
    return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

std::size_t xonly_syzygy_dim(const MinRankInstance& inst, std::uint32_t d, const EliminationConfig& elim,
                             std::uint64_t cell_cap) {
    auto mac = macaulay(inst, d + 1, cell_cap);
    return left_kernel_dim(mac.data, elim);
}

Vector syzygy_row_vector(const Syzygy& s, const MacaulayLayout& L) {
    if (L.b != 2) throw InvalidArgument("syzygy_row_vector: layout must be at b = 2");
    Vector v(L.rows(), 0);
    for (const auto& [e, form] : s.entries)
        for (const auto& [a, c] : form.coeffs) {
            const std::uint32_t mono[1] = {a};
            v[L.row_index(mono, e)] = c;
        }
    return v;
}

SpanReport sprime_span_check(const MinRankInstance& inst, const EliminationConfig& elim) {
    const auto& F = inst.field();
    auto mac = macaulay(inst, 2);
    SpanReport rep;
    rep.kernel_dim = left_kernel_dim(mac.data, elim);

    auto gens = enumerate_sprime1(F, inst.m(), inst.n(), inst.r());
    auto g3 = enumerate_sprime3(F, inst.m(), inst.n(), inst.r());
    gens.insert(gens.end(), std::make_move_iterator(g3.begin()), std::make_move_iterator(g3.end()));
    rep.generators = gens.size();

    std::vector<Vector> rows;
    rep.all_annihilate = true;
    for (const auto& g : gens) {
        auto v = syzygy_row_vector(specialize(g, inst), mac.layout);
        auto image = left_multiply(v, mac.data);
        if (std::any_of(image.begin(), image.end(), [](Fq x) { return x != 0; })) rep.all_annihilate = false;
        rows.push_back(std::move(v));
    }
    rep.stacked_rank = rows.empty() ? 0 : rank(stack_rows(F, rows, mac.layout.rows()));
    return rep;
}

BigInt submax_dim_formula(std::uint64_t m, std::uint64_t n, std::uint64_t K, std::uint64_t b) {
    if (m <= n || b <= n || K == 0) return 0;
    const std::uint64_t upper = std::min({m - n, n + 1, b - n});
    BigInt sum = 0;
    for (std::uint64_t i = 1; i <= upper; ++i) {
        BigInt term = binom_big(m, n + i) * binom_big(n, i - 1) * binom_big(K + b - n - i - 1, K - 1);
        if (i % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

std::size_t submax_dim_empirical(const MinRankInstance& inst, std::uint32_t b, const EliminationConfig& elim,
                                 std::uint64_t cell_cap) {
    if (inst.r() + 1 != inst.n()) throw InvalidArgument("submax: requires r = n - 1");
    if (b == 0) throw InvalidArgument("submax: b must be >= 1");
    return xonly_syzygy_dim(inst, b - 1, elim, cell_cap);
}

GeneratorCounts generator_counts(std::uint64_t m, std::uint64_t n, std::uint64_t r) {
    GeneratorCounts c;
    c.s1 = binom_big(m + r, r + 1) * binom_big(n, r + 2) * (r + 1);
    c.s2 = binom_big(m + r, r + 2) * binom_big(n, r + 1) * (r + 1);
    c.s3 = binom_big(m + r, r + 2) * binom_big(n, r + 2) * (r + 1);
    c.s4 = c.s3;
    c.sprime1 = BigInt(m) * binom_big(n, r + 2);
    c.sprime3 = binom_big(m, 2) * binom_big(n, r + 2);
    return c;
}

}  // namespace minrank

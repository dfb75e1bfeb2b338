#include "minrank/error.hpp"
#include "minrank/rng.hpp"
#include "minrank/support_minors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace minrank;

namespace {

DenseMatrix random_dense(const PrimeField& F, ChaChaRng& rng, std::size_t r, std::size_t c) {
    DenseMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(F.q());
    return m;
}

Vector random_vector(const PrimeField& F, ChaChaRng& rng, std::size_t len) {
    Vector v(len);
    for (auto& e : v) e = rng.uniform(F.q());
    return v;
}

// Minor of the (r+1) x n matrix [row; C] on the columns J, by permutation expansion.
Fq stacked_minor(const PrimeField& F, std::span<const Fq> row, const DenseMatrix& C, const std::vector<std::uint32_t>& J) {
    std::vector<std::vector<Fq>> a;
    std::vector<Fq> top;
    for (auto j : J) top.push_back(row[j]);
    a.push_back(top);
    for (std::size_t i = 0; i < C.rows(); ++i) {
        std::vector<Fq> rr;
        for (auto j : J) rr.push_back(C(i, j));
        a.push_back(rr);
    }
    return oracle::leibniz_det(F, a);
}

Fq eval_equation(const PrimeField& F, const BilinearEquation& eq, std::span<const Fq> x, std::span<const Fq> pl) {
    Fq acc = 0;
    for (const auto& t : eq.terms) acc = F.add(acc, F.mul(t.coeff, F.mul(x[t.var], pl[t.pluecker])));
    return acc;
}

Fq dot(const PrimeField& F, const SparseRow& row, std::span<const Fq> v) {
    Fq acc = 0;
    for (const auto& e : row) acc = F.mul_add(acc, e.value, v[e.col]);
    return acc;
}

}  // namespace

TEST_CASE("equation count and ordering") {
    PrimeField F(32003);
    auto inst = gen_random(F, 4, 4, 3, 2, 1);
    auto eqs = build_equations(inst);
    REQUIRE(eqs.size() == 16);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
        CHECK(equation_index(eqs[e].row, subset_rank(eqs[e].columns, 4), 4, 2) == e);
        CHECK(eqs[e].columns.size() == 3);
    }
    CHECK(eqs[0].columns == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(eqs[4].row == 1);

    auto full = gen_random(F, 2, 3, 2, 3, 1);
    CHECK_THROWS_AS(build_equations(full), InvalidArgument);
}

TEST_CASE("equations are the minors of the stacked matrix") {
    for (std::uint32_t q : {7U, 32003U}) {
        PrimeField F(q);
        ChaChaRng rng(q * 3);
        for (int trial = 0; trial < 15; ++trial) {
            std::uint32_t n = 2 + rng.uniform(4), r = 1 + rng.uniform(n - 1), m = 1 + rng.uniform(4),
                          K = 1 + rng.uniform(4);
            auto inst = gen_random(F, m, n, K, r, trial);
            auto eqs = build_equations(inst);
            Vector x = random_vector(F, rng, K);
            DenseMatrix C = random_dense(F, rng, r, n);
            Vector pl = pluecker_coordinates(C);
            DenseMatrix Mx = evaluate_pencil(inst, x);
            for (const auto& eq : eqs) CHECK(eval_equation(F, eq, x, pl) == stacked_minor(F, Mx.row(eq.row), C, eq.columns));
        }
    }
}

TEST_CASE("pluecker coordinates") {
    PrimeField F(31);
    ChaChaRng rng(5);
    DenseMatrix C = random_dense(F, rng, 2, 4);
    auto pl = pluecker_coordinates(C);
    auto subsets = oracle::colex_subsets(4, 2);
    REQUIRE(pl.size() == subsets.size());
    for (std::size_t i = 0; i < pl.size(); ++i) {
        const auto& T = subsets[i];
        CHECK(pl[i] == F.sub(F.mul(C(0, T[0]), C(1, T[1])), F.mul(C(0, T[1]), C(1, T[0]))));
    }
    // a row space and any basis of it give proportional vectors
    DenseMatrix A = random_dense(F, rng, 2, 4);
    DenseMatrix G(F, 2, 2, {1, 2, 3, 5});
    auto p1 = row_space_pluecker(A, 2), p2 = pluecker_coordinates(G * A);
    Fq det = determinant(G);
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p2[i] == F.mul(det, pluecker_coordinates(A)[i]));
    CHECK(normalize_projective(F, p1) == normalize_projective(F, pluecker_coordinates(A)));
    CHECK_THROWS_AS(row_space_pluecker(random_dense(F, rng, 3, 4), 2), InvalidArgument);
}

TEST_CASE("macaulay layout") {
    auto L1 = MacaulayLayout::make(3, 4, 4, 2, 1), L2 = MacaulayLayout::make(3, 4, 4, 2, 2);
    CHECK(L1.rows() == 16);
    CHECK(L1.cols() == 18);
    CHECK(L2.rows() == 48);
    CHECK(L2.cols() == 36);
    auto L5 = MacaulayLayout::make(5, 5, 3, 2, 4);
    CHECK(L5.rows() == 175);
    CHECK(L5.cols() == 210);
    for (std::uint64_t row = 0; row < L2.rows(); ++row) {
        auto [mu, e] = L2.row_key(row);
        CHECK(L2.row_index(mu, e) == row);
    }
    for (std::uint64_t col = 0; col < L2.cols(); ++col) {
        auto [nu, t] = L2.col_key(col);
        CHECK(L2.col_index(nu, t) == col);
    }
    CHECK(L2.col_index(Monomial{0, 0}, 0) == 0);
    CHECK(L2.col_index(Monomial{0, 1}, 2) == 6 + 2);
}

TEST_CASE("macaulay rows evaluate to monomial times equation") {
    PrimeField F(32003);
    ChaChaRng rng(77);
    auto inst = gen_random(F, 3, 4, 3, 2, 4);
    auto eqs = build_equations(inst);
    for (unsigned b = 1; b <= 3; ++b) {
        auto mac = macaulay(inst, b);
        Vector x = random_vector(F, rng, 3);
        Vector pl = pluecker_coordinates(random_dense(F, rng, 2, 4));
        Vector ev = evaluation_vector(mac.layout, F, x, pl);
        for (std::uint64_t row = 0; row < mac.layout.rows(); ++row) {
            auto [mu, e] = mac.layout.row_key(row);
            Fq mv = 1;
            for (auto l : mu) mv = F.mul(mv, x[l]);
            CHECK(dot(F, mac.data.row(row), ev) == F.mul(mv, eval_equation(F, eqs[e], x, pl)));
        }
    }
}

TEST_CASE("planted solution lies in the kernel") {
    PrimeField F(32003);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = gen_planted(F, 4, 4, 3, 2, seed);
        auto pl = row_space_pluecker(evaluate_pencil(p.instance, p.witness), 2);
        for (unsigned b = 1; b <= 2; ++b) {
            auto mac = macaulay(p.instance, b);
            auto prod = mac.data * evaluation_vector(mac.layout, F, p.witness, pl);
            CHECK(std::all_of(prod.begin(), prod.end(), [](Fq v) { return v == 0; }));
        }
    }
}

TEST_CASE("matrix cap") {
    PrimeField F(32003);
    auto inst = gen_random(F, 4, 4, 3, 2, 0);
    CHECK_THROWS_AS(macaulay(inst, 2, 100), CapExceeded);
    CHECK_NOTHROW(macaulay(inst, 2, 48 * 36));
}

TEST_CASE("rank checks on generic instances") {
    PrimeField F(32003);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = gen_random(F, 4, 4, 3, 2, seed);
        auto r1 = rank_check(inst, 1);
        CHECK(r1.observed_rank == 16);
        CHECK(r1.match);
        auto r2 = rank_check(inst, 2);
        CHECK(r2.observed_rank == 36);
        CHECK(r2.precondition_met);
        CHECK(r2.match);
    }
    CHECK_THROWS_AS(rank_check(gen_random(F, 4, 4, 3, 2, 0), 3), InvalidArgument);
}

TEST_CASE("solver recovers planted witnesses") {
    PrimeField F(32003);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = gen_planted(F, 4, 4, 3, 2, seed);
        auto res = solve_linearization(p.instance, 2);
        auto w = normalize_projective(F, p.witness);
        CHECK(std::any_of(res.solutions.begin(), res.solutions.end(), [&](const auto& s) { return s.x == w; }));
        for (const auto& s : res.solutions) CHECK(verify_solution(p.instance, s.x, 2));
        CHECK(res.diagnostics.rows == 48);
        CHECK(res.diagnostics.cols == 36);
    }
}

TEST_CASE("solver at b = 1 with an overdetermined system") {
    PrimeField F(32003);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = gen_planted(F, 5, 4, 3, 2, seed);  // 20 >= 18 - 1
        auto res = solve_linearization(p.instance, 1);
        REQUIRE(res.solutions.size() == 1);
        CHECK(res.solutions[0].x == normalize_projective(F, p.witness));
        CHECK(res.diagnostics.strategy == "direct");
    }
}

TEST_CASE("solver matches brute force over small fields") {
    for (std::uint32_t q : {7U, 31U}) {
        PrimeField F(q);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto p = gen_planted(F, 4, 4, 3, 2, seed);
            auto res = solve_linearization(p.instance, 2);
            auto brute = brute_force_solve(p.instance, 2);
            if (!res.diagnostics.complete) continue;
            CHECK(res.solutions == brute);
        }
    }
}

TEST_CASE("fixing a pluecker coordinate") {
    PrimeField F(32003);
    auto p = gen_planted(F, 4, 4, 3, 2, 3);
    SolveConfig cfg;
    cfg.fix_pluecker = 0;
    auto res = solve_linearization(p.instance, 2, cfg);
    auto w = normalize_projective(F, p.witness);
    CHECK(std::any_of(res.solutions.begin(), res.solutions.end(), [&](const auto& s) { return s.x == w; }));
    cfg.fix_pluecker = 6;
    CHECK_THROWS_AS(solve_linearization(p.instance, 2, cfg), InvalidArgument);
}

TEST_CASE("x-space enumeration when the kernel is large") {
    PrimeField F(7);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto p = gen_planted(F, 3, 6, 5, 2, seed);
        auto res = solve_linearization(p.instance, 1);
        CHECK(res.diagnostics.kernel_dim > 8);
        CHECK(res.diagnostics.strategy == "enumeration");
        REQUIRE(res.diagnostics.complete);
        CHECK(res.solutions == brute_force_solve(p.instance, 2));
    }
}

TEST_CASE("pencil extraction on a two-dimensional kernel") {
    PrimeField F(32003);
    SolveConfig cfg;
    cfg.combination_cap = 1;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = gen_planted(F, 4, 4, 3, 2, seed);
        auto res = solve_linearization(p.instance, 1, cfg);
        if (res.diagnostics.kernel_dim != 2) continue;
        CHECK(res.diagnostics.strategy == "pencil");
        auto w = normalize_projective(F, p.witness);
        CHECK(std::any_of(res.solutions.begin(), res.solutions.end(), [&](const auto& s) { return s.x == w; }));
    }
}

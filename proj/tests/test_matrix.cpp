#include "minrank/error.hpp"
#include "minrank/matrix.hpp"
#include "minrank/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace minrank;

namespace {

DenseMatrix random_dense(const PrimeField& F, ChaChaRng& rng, std::size_t r, std::size_t c, int zero_percent = 0) {
    DenseMatrix m(F, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = (static_cast<int>(rng.uniform(100)) < zero_percent) ? 0 : rng.uniform(F.q());
    return m;
}

// Product of random r x k and k x c: rank at most k.
DenseMatrix low_rank(const PrimeField& F, ChaChaRng& rng, std::size_t r, std::size_t c, std::size_t k) {
    return random_dense(F, rng, r, k) * random_dense(F, rng, k, c);
}

}  // namespace

TEST_CASE("rref examples") {
    PrimeField F(5);
    auto id = rref(DenseMatrix::identity(F, 3));
    CHECK(id.rank == 3);
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    auto z = rref(DenseMatrix(F, 3, 4));
    CHECK(z.rank == 0);
    CHECK(z.pivots.empty());

    DenseMatrix m(F, 2, 2, {1, 2, 2, 4});
    CHECK(rref(m).rank == 1);
    CHECK(rank(m) == 1);
    CHECK(rref(m).reduced == DenseMatrix(F, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("kernel examples") {
    PrimeField F(5);
    CHECK(right_kernel_basis(DenseMatrix::identity(F, 4)).empty());

    auto zero_basis = right_kernel_basis(DenseMatrix(F, 2, 3));
    REQUIRE(zero_basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Vector e(3, 0);
        e[i] = 1;
        CHECK(zero_basis[i] == e);
    }

    auto k = right_kernel_basis(DenseMatrix(F, 1, 2, {1, 2}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vector{3, 1});
}

TEST_CASE("left kernel dimension") {
    PrimeField F(7);
    CHECK(left_kernel_dim(DenseMatrix::identity(F, 3)) == 0);
    DenseMatrix m(F, 2, 3, {1, 2, 3, 1, 2, 3});
    CHECK(left_kernel_dim(m) == 1);
    CHECK(rank(m) == rank(m.transpose()));
}

TEST_CASE("linear algebra properties on random matrices") {
    for (std::uint32_t q : {2U, 3U, 7U, 32003U}) {
        PrimeField F(q);
        ChaChaRng rng(q);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + rng.uniform(9), c = 1 + rng.uniform(9);
            DenseMatrix m = (trial % 3 == 0) ? low_rank(F, rng, r, c, 1 + rng.uniform(3)) : random_dense(F, rng, r, c, 40);

            auto red = rref(m);
            CHECK(red.rank == rank(m));
            CHECK(rank(m) == rank(m.transpose()));
            CHECK(rref(red.reduced).reduced == red.reduced);
            for (std::size_t i = 1; i < red.pivots.size(); ++i) CHECK(red.pivots[i - 1] < red.pivots[i]);

            auto ker = right_kernel_basis(m);
            CHECK(ker.size() == c - red.rank);
            for (const auto& v : ker) {
                auto mv = m * v;
                CHECK(std::all_of(mv.begin(), mv.end(), [](Fq x) { return x == 0; }));
            }
            if (!ker.empty()) CHECK(rank(stack_rows(F, ker, c)) == ker.size());

            DenseMatrix b = random_dense(F, rng, c, 1 + rng.uniform(6), 30);
            CHECK(rank(m * b) <= std::min(rank(m), rank(b)));

            if (r <= 4 && c <= 4) CHECK(rank(m) == oracle::minor_rank(F, m));
        }
    }
}

TEST_CASE("determinant against permutation expansion") {
    PrimeField F(31);
    ChaChaRng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.uniform(5);
        DenseMatrix m = random_dense(F, rng, n, n, 30);
        std::vector<std::vector<Fq>> rows(n);
        for (std::size_t i = 0; i < n; ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
        CHECK(determinant(m) == oracle::leibniz_det(F, rows));
    }
}

TEST_CASE("sparse elimination agrees with dense") {
    for (std::uint32_t q : {2U, 7U, 32003U}) {
        PrimeField F(q);
        ChaChaRng rng(q + 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t r = 1 + rng.uniform(40), c = 1 + rng.uniform(40);
            DenseMatrix d = (trial % 2) ? low_rank(F, rng, r, c, 1 + rng.uniform(10)) : random_dense(F, rng, r, c, 85);
            auto s = SparseMatrix::from_dense(d);
            CHECK(s.to_dense() == d);
            CHECK(sparse_rank(s) == rank(d));
            CHECK(rank(s, EliminationConfig{0}) == rank(d));
            CHECK(left_kernel_dim(s, EliminationConfig{0}) == left_kernel_dim(d));
        }
    }
}

TEST_CASE("sparse row invariants are enforced") {
    PrimeField F(7);
    SparseMatrix s(F, 2, 4);
    CHECK_NOTHROW(s.set_row(0, {{0, 1}, {3, 6}}));
    CHECK_THROWS_AS(s.set_row(1, {{2, 1}, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(s.set_row(1, {{1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(s.set_row(1, {{4, 1}}), InvalidArgument);
    CHECK_THROWS_AS(s.set_row(1, {{1, 7}}), InvalidArgument);
    CHECK(s.nonzeros() == 2);
    Vector v{1, 1, 1, 1};
    CHECK((s * v) == Vector{0, 0});
    CHECK(left_multiply(Vector{2, 0}, s) == Vector{2, 0, 0, 5});
}

TEST_CASE("dense matrix rejects unreduced entries") {
    PrimeField F(5);
    CHECK_THROWS_AS(DenseMatrix(F, 1, 2, {1, 5}), InvalidArgument);
    CHECK_THROWS_AS(DenseMatrix(F, 1, 2, {1}), InvalidArgument);
}

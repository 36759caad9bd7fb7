#include <doctest.h>

#include "support.hpp"
#include "tclass/f2.hpp"

using namespace tclass;
using namespace tclass::testing;

TEST_SUITE("f2") {

TEST_CASE("rref of an invertible 2x2") {
    auto [r, rk] = rref(F2Matrix{{1, 1}, {0, 1}});
    CHECK(rk == 2);
    CHECK(r == F2Matrix::identity(2));
}

TEST_CASE("rref collapses repeated rows") {
    auto [r, rk] = rref(F2Matrix{{1, 1}, {1, 1}});
    CHECK(rk == 1);
    CHECK(r == F2Matrix{{1, 1}, {0, 0}});
}

TEST_CASE("rref of zero matrix") {
    auto [r, rk] = rref(F2Matrix(3, 3));
    CHECK(rk == 0);
    CHECK(r == F2Matrix(3, 3));
}

TEST_CASE("rref is idempotent") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const F2Matrix m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12);
        const auto [once, rk1] = rref(m);
        const auto [twice, rk2] = rref(once);
        CHECK(once == twice);
        CHECK(rk1 == rk2);
    }
}

TEST_CASE("membership in spans") {
    const RowSpace full = RowSpace::from_generators(F2Matrix{{1, 0}, {0, 1}});
    CHECK(full.member(F2Vector(2, {1, 1})));

    const RowSpace zaxis = RowSpace::from_generators(F2Matrix{{0, 1}});
    CHECK_FALSE(zaxis.member(F2Vector(2, {1, 0})));
    CHECK(zaxis.member(F2Vector(2)));  // zero vector lies in every space
    CHECK(full.member(F2Vector(2)));

    CHECK_THROWS_AS((void)zaxis.member(F2Vector(3)), std::invalid_argument);
}

TEST_CASE("invert") {
    CHECK(invert(F2Matrix::identity(4)) == F2Matrix::identity(4));
    const F2Matrix m{{1, 0}, {1, 1}};
    CHECK(invert(m) == m);  // self-inverse over GF(2)
    CHECK_THROWS_AS(invert(F2Matrix{{1, 1}, {1, 1}}), SingularMatrixError);
    CHECK_THROWS_AS(invert(F2Matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("product and sum basics") {
    const F2Matrix j{{0, 1}, {1, 0}};
    CHECK(j * j == F2Matrix::identity(2));

    const F2Matrix x{{1, 1}, {1, 0}};
    CHECK(x * x == F2Matrix{{0, 1}, {1, 1}});  // x^2 = x + 1

    Rng rng(11);
    const F2Matrix a = random_matrix(rng, 5, 7);
    CHECK(a + a == F2Matrix(5, 7));  // characteristic 2

    CHECK_THROWS_AS(a * a, std::invalid_argument);
    CHECK_THROWS_AS(a + F2Matrix(5, 6), std::invalid_argument);
}

TEST_CASE("row space is preserved by rref") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 16;
        const F2Matrix m = random_matrix(rng, rows, cols);
        const RowSpace before = RowSpace::from_generators(m);
        const auto [red, rk] = rref(m);
        for (std::size_t r = 0; r < rows; ++r) {
            CHECK(before.member(red.row(r)));
            CHECK(RowSpace::from_generators(red).member(m.row(r)));
        }
        CHECK(rk == before.dim());
    }
}

TEST_CASE("rank equals rank of the transpose") {
    Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        const F2Matrix m = random_matrix(rng, 1 + rng() % 64, 1 + rng() % 64);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("invert succeeds exactly on full-rank matrices") {
    Rng rng(19);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + rng() % 12;
        const F2Matrix m = random_matrix(rng, n, n);
        if (rank(m) == n) {
            CHECK(m * invert(m) == F2Matrix::identity(n));
            CHECK(invert(m) * m == F2Matrix::identity(n));
        } else {
            CHECK_THROWS_AS(invert(m), SingularMatrixError);
        }
    }
}

TEST_CASE("packed operations agree with the per-bit reference") {
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 1 + rng() % 20, m = 1 + rng() % 20, p = 1 + rng() % 20;
        const F2Matrix a = random_matrix(rng, n, m);
        const F2Matrix b = random_matrix(rng, m, p);
        const F2Matrix c = random_matrix(rng, n, m);
        CHECK(grid_of(a * b) == naive_mul(grid_of(a), grid_of(b)));
        CHECK(grid_of(a + c) == naive_add(grid_of(a), grid_of(c)));
        CHECK(grid_of(a.transposed()) == naive_transpose(grid_of(a)));
        CHECK(rank(a) == naive_rank(grid_of(a)));
    }
}

TEST_CASE("row space invariants") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        const F2Matrix m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12);
        const RowSpace s = RowSpace::from_generators(m);
        for (std::size_t r = 0; r < s.dim(); ++r) {
            CHECK_FALSE(s.basis().row(r).is_zero());
            if (r + 1 < s.dim()) CHECK(s.pivots()[r] < s.pivots()[r + 1]);
        }
    }
}

TEST_CASE("Mat2 round-trips and arithmetic") {
    for (unsigned m = 0; m < 16; ++m) {
        const Mat2 x{static_cast<std::uint8_t>(m)};
        CHECK(mat2_from_f2(to_f2(x)) == x);
        CHECK(grid_of(to_f2(x.transposed())) == naive_transpose(grid_of(to_f2(x))));
        for (unsigned k = 0; k < 16; ++k) {
            const Mat2 y{static_cast<std::uint8_t>(k)};
            CHECK(to_f2(x * y) == to_f2(x) * to_f2(y));
            CHECK(to_f2(x + y) == to_f2(x) + to_f2(y));
        }
        if (x.invertible())
            CHECK(x * x.inverse() == Mat2::identity());
        else
            CHECK_THROWS_AS(x.inverse(), SingularMatrixError);
    }
}

}  // TEST_SUITE

#include "doctest.h"
#include "rng.hpp"
#include "twisthom/matrix.hpp"

using namespace twisthom;

TEST_CASE("matrix basics") {
    auto m = IntMatrix::of({{1, 2}, {3, 4}});
    CHECK(m.rows() == 2);
    CHECK(m.at(1, 0) == 3);
    CHECK((m * IntMatrix::identity(2)) == m);
    CHECK((IntMatrix::identity(2) * m) == m);
    CHECK((m - m).is_zero());
    CHECK(m.transposed().at(0, 1) == 3);
    CHECK_FALSE(m.is_identity());
    CHECK(IntMatrix::identity(3).is_identity());
}

TEST_CASE("matrix empty shapes keep dimensions") {
    IntMatrix a(3, 0), b(0, 2);
    auto p = a * b;
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 2);
    CHECK(p.is_zero());
    CHECK(IntMatrix(0, 0).is_identity());
    CHECK_THROWS_AS(a * IntMatrix(1, 1), ShapeMismatch);
}

TEST_CASE("matrix mod reduction") {
    auto m = IntMatrix::of({{-1, 5}, {7, -8}});
    auto r = m.reduced_mod(4);
    CHECK(r == IntMatrix::of({{3, 1}, {3, 0}}));
}

TEST_CASE("hcat and blocks") {
    auto a = IntMatrix::of({{1}, {2}});
    auto b = IntMatrix::of({{3}, {4}});
    CHECK(IntMatrix::hcat(a, b) == IntMatrix::of({{1, 3}, {2, 4}}));
    auto d = IntMatrix::diag_blocks({IntMatrix::of({{2}}), IntMatrix::of({{3}})});
    CHECK(d == IntMatrix::of({{2, 0}, {0, 3}}));
}

TEST_CASE("determinant exact") {
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    CHECK(determinant(IntMatrix::of({{2, 4}, {6, 8}})) == -8);
    CHECK(determinant(IntMatrix::of({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    testutil::Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        auto u = rng.unimodular(4);
        auto det = determinant(u);
        CHECK((det == 1 || det == -1));
    }
}

#include "doctest.h"
#include "rng.hpp"
#include "twisthom/smith.hpp"

using namespace twisthom;

namespace {

void check_snf_contract(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    auto du = determinant(s.u);
    auto dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.rank; ++i) {
        CHECK(s.d.at(i, i) > 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("smith of empty matrix") {
    auto s = smith_normal_form(IntMatrix(0, 0));
    CHECK(s.d.rows() == 0);
    CHECK(s.d.cols() == 0);
    CHECK(s.rank == 0);
}

TEST_CASE("smith of identity") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.d == IntMatrix::identity(2));
    CHECK(s.rank == 2);
}

TEST_CASE("smith of [[2,4],[6,8]]") {
    // Hand reduction oracle: r2 -= 3 r1 -> [[2,4],[0,-4]]; c2 -= 2 c1 ->
    // [[2,0],[0,-4]]; negate -> diag(2,4). Chain 2 | 4.
    auto s = smith_normal_form(IntMatrix::of({{2, 4}, {6, 8}}));
    CHECK(s.d == IntMatrix::of({{2, 0}, {0, 4}}));
    check_snf_contract(IntMatrix::of({{2, 4}, {6, 8}}));
}

TEST_CASE("smith contract on random matrices") {
    testutil::Rng rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = static_cast<std::size_t>(rng.range(0, 5));
        std::size_t c = static_cast<std::size_t>(rng.range(0, 5));
        check_snf_contract(rng.matrix(r, c, -9, 9));
    }
}

TEST_CASE("kernel basis over Z") {
    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
    auto k = kernel_basis(IntMatrix::of({{1, 1}}));
    REQUIRE(k.cols() == 1);
    // (1,-1) up to sign
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK((k.at(0, 0) == 1 || k.at(0, 0) == -1));
}

TEST_CASE("kernel basis spans exactly the kernel on randoms") {
    testutil::Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        auto m = rng.matrix(static_cast<std::size_t>(rng.range(1, 4)),
                            static_cast<std::size_t>(rng.range(1, 4)), -3, 3);
        auto k = kernel_basis(m);
        CHECK((m * k).is_zero());
        // saturated: any integer kernel vector solves over the basis
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("solve_exact and spans") {
    auto a = IntMatrix::of({{2, 0}, {0, 3}});
    auto b = IntMatrix::of({{4}, {9}});
    auto x = solve_exact(a, b);
    CHECK(a * x == b);
    CHECK_FALSE(try_solve_exact(a, IntMatrix::of({{1}, {0}})).has_value());
    CHECK(columns_in_span(a, IntMatrix::of({{2}, {3}})));
    CHECK_FALSE(columns_in_span(a, IntMatrix::of({{1}, {1}})));
}

TEST_CASE("lattice basis spans the same lattice") {
    testutil::Rng rng(99);
    for (int t = 0; t < 30; ++t) {
        auto gens = rng.matrix(3, static_cast<std::size_t>(rng.range(0, 5)), -4, 4);
        auto basis = lattice_basis(gens);
        CHECK(rank(basis) == basis.cols());
        if (gens.cols()) {
            CHECK(columns_in_span(basis, gens));
            CHECK(columns_in_span(gens, basis));
        }
    }
}

TEST_CASE("preimage basis") {
    // {x : 2x in 4Z} = 2Z
    auto p = preimage_basis(IntMatrix::of({{2}}), IntMatrix::of({{4}}));
    REQUIRE(p.cols() == 1);
    CHECK((p.at(0, 0) == 2 || p.at(0, 0) == -2));
}

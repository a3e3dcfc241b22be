#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpc/algebra.hpp"
#include "lpc/error.hpp"

#include "oracles.hpp"

using namespace lpc;

TEST_CASE("builtin sl(n) matches commutators of matrix units") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        LieAlgebra alg = builtin_sl(n);
        auto basis = oracle::sln_basis(n);
        REQUIRE(alg.dim() == basis.size());
        CHECK(sln_matrix_basis(n) == basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) {
                Vector expected = oracle::sln_coords(basis[i] * basis[j] - basis[j] * basis[i]);
                Vector got(alg.dim());
                for (const auto& [k, c] : alg.bracket(i, j)) got[k] = c;
                CHECK(got == expected);
            }
        CHECK(alg.cartan_indices().size() == static_cast<std::size_t>(n - 1));
        CHECK(validate_algebra(alg).all_passed());
    }
}

TEST_CASE("validation reports witnesses") {
    // [x0,x1] = x2, [x0,x2] = x0, [x1,x2] = x2 violates Jacobi.
    LieAlgebra bad("bad", {"a", "b", "c"}, {{0, 1, 2, 1}, {0, 2, 0, 1}, {1, 2, 2, 1}});
    auto rep = validate_algebra(bad);
    CHECK(rep.antisymmetry.passed);
    CHECK_FALSE(rep.jacobi.passed);
    CHECK(rep.jacobi.witness.size() == 4);  // (i, j, k, component)

    auto ab = abelian_algebra(3);
    auto r2 = validate_algebra(ab);
    CHECK(r2.jacobi.passed);
    CHECK_FALSE(r2.killing_nondegenerate.passed);
    CHECK_FALSE(r2.semisimple());

    CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, {{1, 0, 0, 1}}), InvalidParameter);
    CHECK_THROWS_AS(LieAlgebra("x", {"a", "b"}, {{0, 1, 5, 1}}), InvalidParameter);
    CHECK_THROWS_AS(builtin_sl(1), InvalidParameter);
}

TEST_CASE("Killing form equals trace of ad products and is invariant") {
    for (int n = 2; n <= 3; ++n) {
        LieAlgebra alg = builtin_sl(n);
        auto b = killing_form(alg);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                Vector ei(alg.dim()), ej(alg.dim());
                ei[i] = 1;
                ej[j] = 1;
                CHECK(b.matrix(i, j) == trace(ad_matrix(alg, ei) * ad_matrix(alg, ej)));
            }
        CHECK(is_ad_invariant(alg, b));
        // On sl(n) the Killing form is 2n times the trace form.
        auto t = trace_form_sln(n);
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) CHECK(b.matrix(i, j) == Rational(2 * n) * t.matrix(i, j));
    }
    LieAlgebra sl2 = builtin_sl(2);
    auto b = killing_form(sl2);
    CHECK(b.matrix(0, 0) == 8);
    CHECK(b.matrix(1, 2) == 4);
}

TEST_CASE("orbit dimensions, rank and regularity") {
    LieAlgebra sl3 = builtin_sl(3);
    CHECK(algebra_rank(sl3) == 2);
    CHECK(orbit_dimension(sl3, SubalgebraSpec::cartan(sl3)) == 2);
    CHECK(orbit_dimension(sl3, SubalgebraSpec::whole(sl3)) == 6);
    CHECK(orbit_dimension(sl3, SubalgebraSpec::zero()) == 0);
    Point zero(8);
    CHECK_FALSE(is_regular(sl3, zero));
    // Dual of a regular semisimple element: x_{h1} = 1, x_{h2} = 3.
    Point mu(8);
    mu[0] = 1;
    mu[1] = 3;
    CHECK(is_regular(sl3, mu));
    CHECK_THROWS_AS(is_regular(abelian_algebra(2), Point(2)), ConfigurationError);
    CHECK(algebra_rank(abelian_algebra(2)) == 2);
}

TEST_CASE("subalgebra checks and centralizers") {
    LieAlgebra sl3 = builtin_sl(3);
    auto cartan = SubalgebraSpec::cartan(sl3);
    CHECK_NOTHROW(check_subalgebra(sl3, cartan));
    Vector e12(8), e21(8);
    e12[2] = 1;
    e21[4] = 1;
    CHECK_THROWS_AS(check_subalgebra(sl3, SubalgebraSpec::span({e12, e21})), InvalidParameter);
    CHECK_THROWS_AS(check_subalgebra(sl3, SubalgebraSpec::span({e12, e12})), InvalidParameter);
    Point mu(8);
    mu[0] = 2;
    mu[1] = 5;
    CHECK(in_centralizer(sl3, cartan, mu));
    mu[2] = 1;
    CHECK_FALSE(in_centralizer(sl3, cartan, mu));
}

TEST_CASE("dual transport round trip") {
    LieAlgebra sl2 = builtin_sl(2);
    auto b = killing_form(sl2);
    auto x = Polynomial::variable(3, 0), e = Polynomial::variable(3, 1), f = Polynomial::variable(3, 2);
    Polynomial p = x * x + Rational(2) * e * f;
    CHECK(dual_transport_inverse(sl2, b, dual_transport(sl2, b, p)) == p);
    CHECK(dual_transport(sl2, b, x) == Rational(1, 8) * x);
}

TEST_CASE("direct sums") {
    auto s = direct_sum(builtin_sl(2), abelian_algebra(1));
    CHECK(s.dim() == 4);
    CHECK(validate_algebra(s).jacobi.passed);
    CHECK(algebra_rank(s) == 2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpc/chain.hpp"
#include "lpc/error.hpp"

#include "oracles.hpp"

#include <memory>

using namespace lpc;

TEST_CASE("verdict names and exit codes") {
    CHECK(exit_code(Verdict::Superintegrable) == 0);
    CHECK(exit_code(Verdict::NotSuperintegrable) == 1);
    CHECK(exit_code(Verdict::Inconclusive) == 2);
    CHECK(to_string(Verdict::Superintegrable) == "superintegrable");
    CHECK(to_string(BaseKind::ShiftAlgebra) == "mf");
}

TEST_CASE("default degree cap") {
    CHECK(default_degree_cap(builtin_sl(2)) == 3);
    CHECK(default_degree_cap(builtin_sl(3)) == 3);
    CHECK(default_degree_cap(builtin_sl(4)) == 4);
}

TEST_CASE("torus chains are superintegrable") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        LieAlgebra alg = builtin_sl(n);
        auto rep = torus_chain(alg);
        std::size_t r = static_cast<std::size_t>(n - 1);
        CHECK(rep.d_a == r);
        CHECK(rep.trdeg_intermediate == alg.dim() - r);
        CHECK(rep.trdeg_base == r);
        CHECK(rep.centrality.passed());
        CHECK(rep.dim_identity);
        CHECK(rep.base_matches_orbit);
        CHECK(rep.verdict == Verdict::Superintegrable);
    }
}

TEST_CASE("a low cap leaves the torus chain inconclusive") {
    auto rep = torus_chain(builtin_sl(3), 2);
    CHECK(rep.trdeg_intermediate == 5);
    CHECK(rep.trdeg_base == 1);
    CHECK_FALSE(rep.intermediate_complete);
    CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("moment-map base") {
    LieAlgebra sl3 = builtin_sl(3);
    auto rep = moment_map_base(sl3, SubalgebraSpec::cartan(sl3));
    CHECK(rep.verdict == Verdict::Superintegrable);
    CHECK(rep.base.labels() == std::vector<std::string>{"mu_1", "mu_2"});

    Vector h(8);
    h[0] = 1;
    h[1] = 2;
    auto one = moment_map_base(sl3, SubalgebraSpec::span({h}, true, true));
    CHECK(one.d_a == 1);
    CHECK(one.trdeg_intermediate == 7);
    CHECK(one.trdeg_base == 1);
    CHECK(one.verdict == Verdict::Superintegrable);

    CHECK_THROWS_AS(moment_map_generators(sl3, SubalgebraSpec::whole(sl3)), HypothesisError);
}

TEST_CASE("shift-algebra base over the torus fails centrality") {
    ChainSpec spec;
    spec.algebra = std::make_shared<LieAlgebra>(builtin_sl(3));
    spec.subalgebra = SubalgebraSpec::cartan(*spec.algebra);
    spec.base.kind = BaseKind::ShiftAlgebra;
    Point mu(8);
    mu[0] = 1;
    mu[1] = 3;
    spec.base.shift = mu;
    auto rep = verify_chain(spec);
    CHECK_FALSE(rep.centrality.passed());
    CHECK(rep.trdeg_base == 5);
    CHECK(rep.verdict == Verdict::NotSuperintegrable);
}

TEST_CASE("ill-formed chains are rejected") {
    ChainSpec spec;
    spec.algebra = std::make_shared<LieAlgebra>(builtin_sl(2));
    spec.subalgebra = SubalgebraSpec::cartan(*spec.algebra);
    spec.base.kind = BaseKind::Explicit;
    spec.base.explicit_generators = GeneratorSet::from_polys(3, {Polynomial::variable(3, 1)}, {"e"});
    CHECK_THROWS_AS(verify_chain(spec), IllFormedChain);
    try {
        verify_chain(spec);
    } catch (const IllFormedChain& e) {
        CHECK(e.witness().find("e") != std::string::npos);
    }
}

TEST_CASE("base center check reports failing pairs") {
    LieAlgebra sl2 = builtin_sl(2);
    auto base = GeneratorSet::from_polys(3, {Polynomial::variable(3, 0)});
    auto inter = GeneratorSet::from_polys(3, {Polynomial::variable(3, 1), Polynomial::variable(3, 0)});
    auto rep = base_center_check(sl2, base, inter);
    CHECK(rep.checked == 2);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].intermediate == 0);
    CHECK(rep.failures[0].bracket == Rational(2) * Polynomial::variable(3, 1));
}

TEST_CASE("existence of a base") {
    LieAlgebra sl3 = builtin_sl(3), sl2 = builtin_sl(2);
    auto yes = base_existence_verdict(sl3, SubalgebraSpec::cartan(sl3));
    CHECK(yes.verdict == Existence::Exists);
    CHECK(yes.center_trdeg >= yes.d_a);
    auto no = base_existence_verdict(sl2, SubalgebraSpec::whole(sl2));
    CHECK(no.d_a == 2);
    CHECK(no.center_trdeg == 1);
    CHECK(no.verdict == Existence::DoesNotExist);
}

TEST_CASE("Weyl group action on sl(n)") {
    const int n = 3;
    std::vector<int> id{0, 1, 2}, swap{1, 0, 2};
    auto ident = weyl_images(n, id);
    for (std::size_t k = 0; k < ident.size(); ++k) CHECK(ident[k] == Polynomial::variable(8, k));
    auto s = weyl_images(n, swap);
    CHECK(substitute(Polynomial::variable(8, 0), s) == -Polynomial::variable(8, 0));
    // Each permutation acts by Poisson automorphisms.
    LieAlgebra alg = builtin_sl(n);
    std::vector<int> cyc{1, 2, 0};
    for (const auto& sigma : {swap, cyc}) {
        auto img = weyl_images(n, sigma);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) {
                auto lhs = lie_poisson_bracket(img[a], img[b], alg);
                auto rhs = substitute(lie_poisson_bracket(Polynomial::variable(8, a), Polynomial::variable(8, b), alg), img);
                CHECK(lhs == rhs);
            }
    }
    LieAlgebra sl3 = builtin_sl(3);
    auto c2 = invariant_basis(sl3, SubalgebraSpec::whole(sl3), 2)[0];
    CHECK(reynolds_sln(n, c2) == c2);
    CHECK(reynolds_sln(n, Polynomial::variable(8, 0)).is_zero());
    auto p = reynolds_sln(n, Polynomial::variable(8, 2) * Polynomial::variable(8, 4));
    CHECK(substitute(p, s) == p);
}

TEST_CASE("normalizer chain for sl(3)") {
    auto rep = normalizer_chain_sln(3);
    CHECK(rep.max_degree == 4);
    CHECK(rep.trdeg_intermediate == 6);
    CHECK(rep.verdict == Verdict::Superintegrable);
    auto low = normalizer_chain_sln(3, 3);
    CHECK(low.trdeg_intermediate == 5);
    CHECK(low.verdict == Verdict::Inconclusive);
}

TEST_CASE("leaf dimensions and the J map") {
    CHECK(leaf_dimension(builtin_sl(2)).value == 0);
    CHECK(leaf_dimension(builtin_sl(3)).value == 2);
    CHECK(leaf_dimension(builtin_sl(4)).value == 6);
    CHECK(leaf_dimension(builtin_sl(4)).valid);
    CHECK_FALSE(leaf_dimension(abelian_algebra(2)).valid);

    LieAlgebra sl3 = builtin_sl(3);
    auto j = j_map_casimir_check(sl3);
    CHECK(j.passed());
    CHECK(j.component_labels == std::vector<std::string>{"mu_h1", "mu_h2", "C2", "C3"});
    CHECK(j.brackets.checked == j.components.size() * j.intermediate.size());
}

TEST_CASE("fiber ideal vanishes at a point of its fiber") {
    LieAlgebra sl3 = builtin_sl(3);
    Point pt{Rational(1), Rational(2), Rational(3), Rational(-1), Rational(2), Rational(1), Rational(0), Rational(5)};
    auto cas = casimirs_by_kernel(sl3, 3);
    std::vector<Rational> c, alpha{pt[0], pt[1]};
    for (const auto& g : cas.generators) c.push_back(evaluate(g, pt));
    auto ideal = fiber_ideal_generators(sl3, c, alpha);
    CHECK(ideal.size() == 4);
    for (const auto& g : ideal) CHECK(evaluate(g, pt) == 0);
    CHECK_THROWS(fiber_ideal_generators(sl3, {Rational(1)}, alpha));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpc/casimir_mf.hpp"
#include "lpc/error.hpp"
#include "lpc/poly_span.hpp"

#include "oracles.hpp"

using namespace lpc;

namespace {

bool central(const LieAlgebra& alg, const Polynomial& p) {
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!lie_poisson_bracket(Polynomial::variable(alg.dim(), i), p, alg).is_zero()) return false;
    return true;
}

Point regular_cartan_point(int n) {
    Point mu(static_cast<std::size_t>(n * n - 1));
    for (int i = 0; i < n - 1; ++i) mu[static_cast<std::size_t>(i)] = Rational(2 * i + 1);
    return mu;
}

}  // namespace

TEST_CASE("Casimirs by kernel have the fundamental degrees") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        LieAlgebra alg = builtin_sl(n);
        auto cas = casimirs_by_kernel(alg, static_cast<unsigned>(n));
        std::vector<unsigned> want;
        for (int d = 2; d <= n; ++d) want.push_back(static_cast<unsigned>(d));
        CHECK(cas.degrees == want);
        CHECK(cas.method == CasimirMethod::Kernel);
        for (const auto& c : cas.generators) {
            CHECK(central(alg, c));
            CHECK(c.leading().second == 1);
            CHECK(noncentral_witnesses(alg, c).empty());
        }
        auto count = casimir_count_check(alg, static_cast<unsigned>(n));
        CHECK(count.matches);
        CHECK(count.found == static_cast<std::size_t>(n - 1));
    }
    CHECK(casimirs_by_kernel(builtin_sl(3), 3).labels() == std::vector<std::string>{"C2", "C3"});
}

TEST_CASE("trace Casimirs are central and lie in the kernel spans") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        LieAlgebra alg = builtin_sl(n);
        auto tr = trace_casimirs_sln(n, static_cast<unsigned>(n));
        CHECK(tr.method == CasimirMethod::TraceTransport);
        CHECK(tr.size() == static_cast<std::size_t>(n - 1));
        for (std::size_t i = 0; i < tr.size(); ++i) {
            CHECK(central(alg, tr.generators[i]));
            auto kernel = invariant_basis(alg, SubalgebraSpec::whole(alg), tr.degrees[i]);
            PolySpan span(alg.dim());
            for (const auto& p : kernel) span.insert(p);
            CHECK(span.contains(tr.generators[i]));
        }
    }
    // The quadratic trace Casimir of sl(2) is proportional to the kernel one.
    auto t2 = trace_casimirs_sln(2, 2).generators[0];
    auto k2 = casimirs_by_kernel(builtin_sl(2), 2).generators[0];
    CHECK(t2.monic() == k2);
    CHECK_THROWS_AS(trace_casimirs_sln(3, 4), InvalidParameter);
    CHECK_THROWS_AS(trace_casimirs_sln(3, 0), InvalidParameter);
    CHECK(noncentral_witnesses(builtin_sl(2), Polynomial::variable(3, 0)).size() == 2);
}

TEST_CASE("shift coefficients are scaled directional derivatives") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto p = oracle::random_polynomial(rng, 4, 4, 5);
        auto comps = homogeneous_components(p);
        auto top = comps.rbegin()->second;
        if (top.is_zero() || *top.degree() == 0) continue;
        Point mu(4);
        for (auto& c : mu) c = static_cast<long>(rng() % 5) - 2;
        auto coeffs = shift_coefficients(top, mu);
        Polynomial d = top;
        Rational fact = 1;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (j) {
                d = directional_derivative(d, mu);
                fact *= static_cast<long>(j);
            }
            CHECK(coeffs[j] == d * (1 / fact));
        }
    }
}

TEST_CASE("argument-shift algebra of sl(3)") {
    LieAlgebra sl3 = builtin_sl(3);
    auto cas = casimirs_by_kernel(sl3, 3);
    auto mf = mf_generators(sl3, cas, regular_cartan_point(3));
    CHECK(mf.generators.size() == 5);
    CHECK(mf.regular);
    CHECK(mf.labels()[0] == "C2_t0");
    auto comm = mf_commutativity_check(sl3, mf);
    CHECK(comm.passed());
    CHECK(comm.pairs_checked == 10);
    auto rank = mf_rank_check(sl3, mf);
    CHECK(rank.expected == 5);
    CHECK(rank.rank == 5);
    CHECK(rank.passed);

    auto inc = mf_inclusion_check(sl3, mf, SubalgebraSpec::cartan(sl3));
    CHECK(inc.centralizer);
    CHECK(inc.generators_invariant);
    CHECK(inc.agreement);

    auto sw = sandwich_check(sl3, cas, mf, SubalgebraSpec::cartan(sl3));
    CHECK(sw.hypothesis_met);
    CHECK(sw.casimirs_included);
    CHECK(sw.holds);
}

TEST_CASE("shift outside the centralizer") {
    LieAlgebra sl3 = builtin_sl(3);
    auto cas = casimirs_by_kernel(sl3, 3);
    Point mu = regular_cartan_point(3);
    mu[2] = 1;  // e12 component
    auto mf = mf_generators(sl3, cas, mu);
    CHECK(mf_commutativity_check(sl3, mf).passed());
    auto inc = mf_inclusion_check(sl3, mf, SubalgebraSpec::cartan(sl3));
    CHECK_FALSE(inc.centralizer);
    CHECK_FALSE(inc.generators_invariant);
    CHECK(inc.agreement);
    CHECK(inc.witness.has_value());
}

TEST_CASE("singular shift is flagged") {
    LieAlgebra sl3 = builtin_sl(3);
    auto cas = casimirs_by_kernel(sl3, 3);
    // Vanishes on E_11 - E_33 = h1 + h2.
    Point mu(8);
    mu[0] = 1;
    mu[1] = -1;
    auto sub = mf_generators(sl3, cas, mu);
    CHECK_FALSE(sub.regular);
    CHECK_FALSE(mf_rank_check(sl3, sub).passed);
    auto zero = mf_generators(sl3, cas, Point(8));
    CHECK_FALSE(zero.regular);
    CHECK(zero.generators.size() == 2);
    CHECK_THROWS_AS(mf_generators(sl3, cas, Point(3)), DimensionMismatch);
}

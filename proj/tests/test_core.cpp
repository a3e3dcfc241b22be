#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpc/error.hpp"
#include "lpc/linalg.hpp"
#include "lpc/poly_io.hpp"
#include "lpc/poly_span.hpp"
#include "lpc/polynomial.hpp"
#include "lpc/rational.hpp"
#include "lpc/sampling.hpp"

#include "oracles.hpp"

#include <random>

using namespace lpc;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(format_rational(parse_rational("6/4")) == "3/2");
    CHECK(format_rational(parse_rational("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    auto v = parse_rational_list("1,-2,1/3");
    REQUIRE(v.size() == 3);
    CHECK(v[2] == Rational(1, 3));
}

TEST_CASE("dense linear algebra") {
    Matrix m(3, 3);
    int vals[9] = {2, 1, 0, 1, 3, 1, 0, 1, 4};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = vals[i];
    CHECK(determinant(m) == Rational(18));
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(3));
    CHECK(rank(m) == 3);
    CHECK(trace(m) == Rational(9));

    Matrix s(2, 3);
    s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3;
    s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
    CHECK(rank(s) == 1);
    auto ker = nullspace(s);
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto r = s * v;
        CHECK(r[0] == 0);
        CHECK(r[1] == 0);
    }
    Matrix sing(2, 2);
    sing(0, 0) = 1; sing(0, 1) = 2; sing(1, 0) = 2; sing(1, 1) = 4;
    CHECK_FALSE(inverse(sing));
}

TEST_CASE("integer echelon kernel agrees with dense RREF on random matrices") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 8;
        Matrix a(rows, cols);
        std::vector<SparseVector> sparse(rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                if (rng() % 3 == 0) continue;
                Rational v(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
                v.canonicalize();
                if (v == 0) continue;
                a(r, c) = v;
                sparse[r].emplace_back(c, v);
            }
        auto dense = nullspace(a);
        auto sp = sparse_nullspace(sparse, cols);
        REQUIRE(dense.size() == sp.size());
        CHECK(dense.size() + rank(a) == cols);
        // Both are RREF-normalized over the same free columns.
        for (std::size_t i = 0; i < dense.size(); ++i) {
            Vector full(cols);
            for (const auto& [c, v] : sp[i]) full[c] = v;
            CHECK(full == dense[i]);
        }
    }
}

TEST_CASE("monomial order is graded lexicographic") {
    GrlexLess lt;
    Monomial x0 = Monomial::variable(0), x1 = Monomial::variable(1);
    CHECK(lt(x1, x0));
    CHECK(lt(x0, x1 * x1));
    CHECK(lt(x0 * x1 * x1, x0 * x0 * x1));
    auto monos = monomials_of_degree(3, 2);
    CHECK(monos.size() == 6);
    for (std::size_t i = 1; i < monos.size(); ++i) CHECK(lt(monos[i - 1], monos[i]));
    CHECK(Monomial({{2, 1}, {0, 2}, {2, 1}}) == Monomial::from_exponents(std::vector<std::uint32_t>{2, 0, 2}));
}

TEST_CASE("polynomial arithmetic") {
    auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    auto p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.is_homogeneous());
    CHECK(*p.degree() == 2);
    CHECK(partial_derivative(p, 0) == Rational(2) * x);
    CHECK((x + y).pow(3) == (x + y) * (x + y) * (x + y));
    Point pt{Rational(3), Rational(1)};
    CHECK(evaluate(p, pt) == Rational(8));
    std::vector<Polynomial> img{y, x};
    CHECK(substitute(p, img) == y * y - x * x);
    CHECK((p - p).is_zero());
    CHECK_FALSE((x + Polynomial::constant(2, 1)).is_homogeneous());
    CHECK((Rational(3) * x * y).monic() == x * y);
    auto comps = homogeneous_components(x * x + y + Polynomial::constant(2, 5));
    CHECK(comps.size() == 3);
}

TEST_CASE("polynomial text round trip") {
    std::mt19937_64 rng(11);
    std::vector<std::string> labels{"h1", "e12", "e21"};
    for (int t = 0; t < 50; ++t) {
        auto p = oracle::random_polynomial(rng, 3, 4, 5);
        CHECK(parse_polynomial(render(p), 3) == p);
        CHECK(parse_polynomial(render(p, labels), 3, labels) == p);
    }
    auto q = parse_polynomial("2*(x0 + x_1)^2 - 1/2*x2", 3);
    CHECK(q.coefficient(Monomial({{0, 1}, {1, 1}})) == Rational(4));
    CHECK(q.coefficient(Monomial::variable(2)) == Rational(-1, 2));
    CHECK_THROWS_AS(parse_polynomial("x7", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 +", 3), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x0", 3), ParseError);
}

TEST_CASE("polynomial span reduction and tags") {
    auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    PolySpan span(2, 3);
    auto a0 = Polynomial::variable(3, 0), a1 = Polynomial::variable(3, 1), a2 = Polynomial::variable(3, 2);
    CHECK_FALSE(span.insert(x * x + y * y, a0).remainder.is_zero());
    CHECK_FALSE(span.insert(x * y, a1).remainder.is_zero());
    auto r = span.insert(Rational(2) * x * x + Rational(2) * y * y - x * y, a2);
    CHECK(r.remainder.is_zero());
    CHECK(r.tag == a2 - Rational(2) * a0 + a1);
    CHECK(span.dim() == 2);
    CHECK(same_span({x * x, y * y}, {x * x + y * y, x * x - y * y}, 2));
    CHECK_FALSE(same_span({x * x}, {y * y}, 2));
    auto basis = span.basis();
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].leading().second == 1);
}

TEST_CASE("sampling is deterministic and seed dependent") {
    SamplingOptions a, b;
    CHECK(sample_points(5, a) == sample_points(5, b));
    b.seed = a.seed + 1;
    CHECK(sample_points(5, a) != sample_points(5, b));
    for (const auto& p : sample_points(4, a))
        for (const auto& c : p) CHECK(abs(c) <= a.bound);
    auto x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1);
    std::vector<Polynomial> gens{x, y, x * y};
    CHECK(jacobian_rank(gens, 3) == 2);
}

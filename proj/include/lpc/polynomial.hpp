#pragma once

#include "lpc/linalg.hpp"
#include "lpc/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lpc {

class LieAlgebra;

/// A monomial x_{v1}^{e1} ... as sorted (variable, exponent) pairs; no zero
/// exponents are stored.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;
    /// Factors may be unsorted and repeated; zero exponents are dropped.
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);
    static Monomial from_exponents(std::span<const std::uint32_t> exps);

    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return factors_.empty(); }
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::uint32_t exponent(std::uint32_t var) const;
    /// Largest variable index used plus one (0 for the unit monomial).
    std::size_t span() const noexcept { return factors_.empty() ? 0 : factors_.back().first + 1; }
    std::vector<std::uint32_t> exponents(std::size_t nvars) const;

    /// Returns m / x_var, or nullopt if x_var does not divide m.
    std::optional<Monomial> divide_variable(std::uint32_t var) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// lowest-index variable where the two differ (larger exponent is larger).
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in a fixed number of variables.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t var);
    static Polynomial term(std::size_t nvars, const Monomial& m, const Rational& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    /// Largest term in graded-lex order. Precondition: nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

    void add_term(const Monomial& m, const Rational& c);
    /// this += c * m * other
    void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m = {});

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// A point of g*, one rational per coordinate.
using Point = std::vector<Rational>;

void check_same_ring(const Polynomial& a, const Polynomial& b);

Polynomial partial_derivative(const Polynomial& p, std::size_t var);

/// {p,q} = sum_{i,j,k} C_ij^k x_k dp/dx_i dq/dx_j
Polynomial lie_poisson_bracket(const Polynomial& p, const Polynomial& q, const LieAlgebra& alg);

Rational evaluate(const Polynomial& p, std::span<const Rational> pt);

/// Row i holds the partial derivatives of gens[i] at pt.
Matrix gradient_matrix(std::span<const Polynomial> gens, std::span<const Rational> pt);

std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& p);

/// Substitutes x_i -> images[i]; the result lives in the ring of the images.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// sum_k images[k] * dp/dx_k: the derivation sending x_k to images[k].
Polynomial apply_derivation(const Polynomial& p, std::span<const Polynomial> images);

/// Same polynomial viewed in a ring with more variables.
Polynomial extend_ring(const Polynomial& p, std::size_t nvars);

/// All monomials of total degree k in n variables, ascending graded-lex.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned k);

}  // namespace lpc

#include "lpc/polynomial.hpp"

#include "lpc/algebra.hpp"
#include "lpc/error.hpp"

#include <algorithm>
#include <numeric>

namespace lpc {

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
        degree_ += e;
    }
}

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) { return Monomial({{var, exp}}); }

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exps) {
    std::vector<Factor> f;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != 0) f.emplace_back(static_cast<std::uint32_t>(i), exps[i]);
    return Monomial(std::move(f));
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
    return (it != factors_.end() && it->first == var) ? it->second : 0;
}

std::vector<std::uint32_t> Monomial::exponents(std::size_t nvars) const {
    std::vector<std::uint32_t> e(nvars, 0);
    for (const auto& [v, x] : factors_) {
        if (v >= nvars) throw DimensionMismatch(nvars, v + 1);
        e[v] = x;
    }
    return e;
}

std::optional<Monomial> Monomial::divide_variable(std::uint32_t var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
    if (it == factors_.end() || it->first != var) return std::nullopt;
    Monomial out = *this;
    auto& f = out.factors_[static_cast<std::size_t>(it - factors_.begin())];
    if (--f.second == 0) out.factors_.erase(out.factors_.begin() + (it - factors_.begin()));
    --out.degree_;
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first))
            out.factors_.push_back(*i++);
        else if (i == a.factors_.end() || j->first < i->first)
            out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin();
    auto j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
        if (i->first != j->first) return i->first > j->first;  // a lacks j's variable
        if (i->second != j->second) return i->second < j->second;
        ++i;
        ++j;
    }
    return false;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw DimensionMismatch(nvars, var + 1);
    Polynomial p(nvars);
    p.add_term(Monomial::variable(static_cast<std::uint32_t>(var)), Rational(1));
    return p;
}

Polynomial Polynomial::term(std::size_t nvars, const Monomial& m, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<unsigned> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (m.span() > nvars_) throw DimensionMismatch(nvars_, m.span());
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& m) {
    check_same_ring(*this, other);
    if (c == 0) return;
    for (const auto& [mon, coef] : other.terms_) add_term(m.is_one() ? mon : mon * m, c * coef);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading().second;
    return *this * inv;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch(a.nvars(), b.nvars());
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.nvars()) throw InvalidParameter("variable index " + std::to_string(var) + " out of range");
    Polynomial out(p.nvars());
    const auto v = static_cast<std::uint32_t>(var);
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = m.exponent(v);
        if (e == 0) continue;
        out.add_term(*m.divide_variable(v), c * e);
    }
    return out;
}

Polynomial lie_poisson_bracket(const Polynomial& p, const Polynomial& q, const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    if (p.nvars() != n) throw DimensionMismatch(n, p.nvars());
    if (q.nvars() != n) throw DimensionMismatch(n, q.nvars());
    Polynomial out(n);
    if (p.is_constant() || q.is_constant()) return out;
    std::vector<std::optional<Polynomial>> dp(n), dq(n);
    auto get = [](std::vector<std::optional<Polynomial>>& cache, const Polynomial& f, std::size_t i)
        -> const Polynomial& {
        if (!cache[i]) cache[i] = partial_derivative(f, i);
        return *cache[i];
    };
    // Only variables present in p (resp. q) can have nonzero partials.
    std::vector<bool> in_p(n, false), in_q(n, false);
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.factors()) in_p[v] = true;
    for (const auto& [m, c] : q.terms())
        for (const auto& [v, e] : m.factors()) in_q[v] = true;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool ij = in_p[i] && in_q[j];
            const bool ji = in_p[j] && in_q[i];
            if (!ij && !ji) continue;
            const SparseVector& br = alg.bracket(i, j);
            if (br.empty()) continue;
            Polynomial cross(n);
            if (ij) cross += get(dp, p, i) * get(dq, q, j);
            if (ji) cross -= get(dp, p, j) * get(dq, q, i);
            if (cross.is_zero()) continue;
            for (const auto& [k, c] : br)
                out.add_scaled(cross, c, Monomial::variable(static_cast<std::uint32_t>(k)));
        }
    }
    return out;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> pt) {
    if (pt.size() != p.nvars()) throw DimensionMismatch(p.nvars(), pt.size());
    Rational total = 0;
    Rational term;
    Rational power;
    for (const auto& [m, c] : p.terms()) {
        term = c;
        for (const auto& [v, e] : m.factors()) {
            mpz_pow_ui(mpq_numref(power.get_mpq_t()), mpq_numref(pt[v].get_mpq_t()), e);
            mpz_pow_ui(mpq_denref(power.get_mpq_t()), mpq_denref(pt[v].get_mpq_t()), e);
            term *= power;
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

Matrix gradient_matrix(std::span<const Polynomial> gens, std::span<const Rational> pt) {
    const std::size_t n = pt.size();
    Matrix g(gens.size(), n);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        if (gens[r].nvars() != n) throw DimensionMismatch(n, gens[r].nvars());
        for (std::size_t i = 0; i < n; ++i) g(r, i) = evaluate(partial_derivative(gens[r], i), pt);
    }
    return g;
}

std::map<unsigned, Polynomial> homogeneous_components(const Polynomial& p) {
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        auto [it, ins] = out.try_emplace(m.degree(), p.nvars());
        it->second.add_term(m, c);
    }
    return out;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars()) throw DimensionMismatch(p.nvars(), images.size());
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw DimensionMismatch(target, im.nvars());
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> powers;
    auto power = [&](std::uint32_t v, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, images[v].pow(e)).first;
        return it->second;
    };
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (const auto& [v, e] : m.factors()) {
            t = t * power(v, e);
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

Polynomial apply_derivation(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.nvars()) throw DimensionMismatch(p.nvars(), images.size());
    Polynomial out(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.factors()) {
            const Polynomial& im = images[v];
            if (im.is_zero()) continue;
            out.add_scaled(im, c * e, *m.divide_variable(v));
        }
    }
    return out;
}

Polynomial extend_ring(const Polynomial& p, std::size_t nvars) {
    Polynomial out(nvars);
    for (const auto& [m, c] : p.terms()) out.add_term(m, c);
    return out;
}

namespace {

void enumerate_monomials(std::size_t n, std::size_t var, unsigned remaining,
                         std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
    if (var + 1 == n) {
        exps[var] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        exps[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        exps[var] = e;
        enumerate_monomials(n, var + 1, remaining - e, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned k) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    std::vector<std::uint32_t> exps(n, 0);
    enumerate_monomials(n, 0, k, exps, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

}  // namespace lpc

#include "lpc/casimir_mf.hpp"

#include "lpc/error.hpp"
#include "lpc/sampling.hpp"

#include <map>

namespace lpc {

std::string to_string(CasimirMethod m) {
    return m == CasimirMethod::Kernel ? "kernel" : "trace-transport";
}

std::vector<std::string> CasimirSet::labels() const {
    std::map<unsigned, std::size_t> per_degree, seen;
    for (unsigned d : degrees) ++per_degree[d];
    std::vector<std::string> out;
    for (unsigned d : degrees) {
        std::string l = "C" + std::to_string(d);
        if (per_degree[d] > 1) l += "_" + std::to_string(++seen[d]);
        out.push_back(l);
    }
    return out;
}

GeneratorSet CasimirSet::as_generator_set() const { return GeneratorSet::from_polys(nvars, generators, labels()); }

CasimirSet casimirs_by_kernel(const LieAlgebra& alg, unsigned max_degree, const CommutantOptions& opts) {
    GeneratorSet gs = generate(alg, SubalgebraSpec::whole(alg), max_degree, opts);
    CasimirSet cs;
    cs.nvars = alg.dim();
    cs.method = CasimirMethod::Kernel;
    for (const auto& g : gs.generators) {
        cs.generators.push_back(g.poly.monic());
        cs.degrees.push_back(g.degree);
    }
    return cs;
}

CasimirSet trace_casimirs_sln(int n, unsigned max_k) {
    if (n < 2) throw InvalidParameter("sl(n) requires n >= 2");
    if (max_k < 1 || max_k > static_cast<unsigned>(n))
        throw InvalidParameter("trace Casimirs need 1 <= max_k <= n, got " + std::to_string(max_k));
    LieAlgebra alg = builtin_sl(n);
    const std::size_t dim = alg.dim();
    const auto basis = sln_matrix_basis(n);
    const std::size_t m = static_cast<std::size_t>(n);

    using PolyMatrix = std::vector<Polynomial>;  // row-major m x m
    PolyMatrix x(m * m, Polynomial(dim));
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (basis[a](i, j) != 0)
                    x[i * m + j].add_term(Monomial::variable(static_cast<std::uint32_t>(a)), basis[a](i, j));

    BilinearForm form = killing_form(alg);
    CasimirSet cs;
    cs.nvars = dim;
    cs.method = CasimirMethod::TraceTransport;
    PolyMatrix power = x;
    for (unsigned k = 1; k <= max_k; ++k) {
        if (k > 1) {
            PolyMatrix next(m * m, Polynomial(dim));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t l = 0; l < m; ++l) {
                    if (power[i * m + l].is_zero()) continue;
                    for (std::size_t j = 0; j < m; ++j)
                        if (!x[l * m + j].is_zero()) next[i * m + j] += power[i * m + l] * x[l * m + j];
                }
            power = std::move(next);
        }
        Polynomial tr(dim);
        for (std::size_t i = 0; i < m; ++i) tr += power[i * m + i];
        if (tr.is_zero()) continue;
        cs.generators.push_back(dual_transport(alg, form, tr));
        cs.degrees.push_back(k);
    }
    return cs;
}

std::vector<std::size_t> noncentral_witnesses(const LieAlgebra& alg, const Polynomial& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (!lie_poisson_bracket(p, Polynomial::variable(alg.dim(), i), alg).is_zero()) out.push_back(i);
    return out;
}

CasimirCountReport casimir_count_check(const LieAlgebra& alg, unsigned max_degree, const CommutantOptions& opts) {
    CasimirSet cs = casimirs_by_kernel(alg, max_degree, opts);
    const std::size_t n = alg.dim();
    CasimirCountReport rep;
    rep.found = jacobian_rank(cs.generators, n, opts.sampling);
    rep.expected = n - generic_rank(n, [&](const Point& x) { return commutator_matrix(alg, x); }, opts.sampling);
    rep.matches = rep.found == rep.expected;
    return rep;
}

std::vector<std::string> MFAlgebra::labels() const {
    std::vector<std::string> base_labels = base.labels();
    std::vector<std::string> out;
    for (const auto& o : origins) out.push_back(base_labels[o.casimir] + "_t" + std::to_string(o.order));
    return out;
}

GeneratorSet MFAlgebra::as_generator_set() const {
    return GeneratorSet::from_polys(base.nvars, generators, labels());
}

std::vector<Polynomial> shift_coefficients(const Polynomial& p, std::span<const Rational> mu) {
    const std::size_t n = p.nvars();
    if (mu.size() != n) throw DimensionMismatch(n, mu.size());
    auto deg = p.degree();
    if (!deg) return {};
    // Substitute x_i -> x_i + mu_i t in a ring with t as the last variable.
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::variable(n + 1, i);
        img.add_term(Monomial::variable(static_cast<std::uint32_t>(n)), mu[i]);
        images.push_back(std::move(img));
    }
    Polynomial shifted = substitute(p, images);
    std::vector<Polynomial> coeffs(*deg, Polynomial(n));
    for (const auto& [m, c] : shifted.terms()) {
        std::uint32_t j = m.exponent(static_cast<std::uint32_t>(n));
        if (j >= *deg) continue;
        std::vector<Monomial::Factor> rest;
        for (const auto& f : m.factors())
            if (f.first != n) rest.push_back(f);
        coeffs[j].add_term(Monomial(std::move(rest)), c);
    }
    return coeffs;
}

Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> mu) {
    if (mu.size() != p.nvars()) throw DimensionMismatch(p.nvars(), mu.size());
    Polynomial out(p.nvars());
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] != 0) out.add_scaled(partial_derivative(p, i), mu[i]);
    return out;
}

MFAlgebra mf_generators(const LieAlgebra& alg, const CasimirSet& cas, const Point& mu) {
    if (mu.size() != alg.dim()) throw DimensionMismatch(alg.dim(), mu.size());
    if (cas.nvars != alg.dim()) throw DimensionMismatch(alg.dim(), cas.nvars);
    MFAlgebra mf;
    mf.shift = mu;
    mf.base = cas;
    for (std::size_t i = 0; i < cas.size(); ++i) {
        auto coeffs = shift_coefficients(cas.generators[i], mu);
        for (unsigned j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            mf.generators.push_back(std::move(coeffs[j]));
            mf.origins.push_back({i, j});
        }
    }
    mf.regular = is_regular(alg, mu, algebra_rank(alg));
    return mf;
}

CommutativityReport mf_commutativity_check(const LieAlgebra& alg, const MFAlgebra& mf) {
    CommutativityReport rep;
    for (std::size_t u = 0; u < mf.generators.size(); ++u)
        for (std::size_t v = u + 1; v < mf.generators.size(); ++v) {
            ++rep.pairs_checked;
            Polynomial b = lie_poisson_bracket(mf.generators[u], mf.generators[v], alg);
            if (!b.is_zero()) rep.nonzero.push_back({u, v, std::move(b)});
        }
    return rep;
}

MFRankReport mf_rank_check(const LieAlgebra& alg, const MFAlgebra& mf, unsigned relation_degree,
                           const CommutantOptions& opts) {
    MFRankReport rep;
    const std::size_t n = alg.dim();
    rep.regular = mf.regular;
    rep.expected = (n + algebra_rank(alg, opts.sampling)) / 2;
    rep.rank = jacobian_rank(mf.generators, n, opts.sampling);
    rep.relation_degree = relation_degree;
    if (!mf.generators.empty())
        rep.relations_found = relation_basis(mf.as_generator_set(), relation_degree, opts).relations.size();
    rep.passed = rep.regular && rep.rank == rep.expected && rep.relations_found == 0;
    rep.note = rep.regular ? "regular shift; regularity (not semisimplicity) is the operative hypothesis"
                           : "hypothesis not met: shift is not regular";
    return rep;
}

InclusionReport mf_inclusion_check(const LieAlgebra& alg, const MFAlgebra& mf, const SubalgebraSpec& sub) {
    InclusionReport rep;
    rep.centralizer = in_centralizer(alg, sub, mf.shift);
    rep.generators_invariant = true;
    for (std::size_t j = 0; j < sub.dim() && rep.generators_invariant; ++j) {
        auto images = invariance_images(alg, sub.vectors[j]);
        for (std::size_t g = 0; g < mf.generators.size(); ++g)
            if (!apply_derivation(mf.generators[g], images).is_zero()) {
                rep.generators_invariant = false;
                rep.witness = std::make_pair(g, j);
                break;
            }
    }
    rep.agreement = rep.centralizer == rep.generators_invariant;
    return rep;
}

SandwichReport sandwich_check(const LieAlgebra& alg, const CasimirSet& cas, const MFAlgebra& mf,
                              const SubalgebraSpec& sub, const SamplingOptions& opts) {
    SandwichReport rep;
    rep.d_a = orbit_dimension(alg, sub, opts);
    rep.rank = algebra_rank(alg, opts);
    rep.hypothesis_met = rep.d_a == rep.rank;

    rep.casimirs_included = true;
    for (std::size_t i = 0; i < cas.size(); ++i) {
        bool found = false;
        for (std::size_t g = 0; g < mf.generators.size(); ++g)
            if (mf.origins[g].casimir == i && mf.origins[g].order == 0 && mf.generators[g] == cas.generators[i])
                found = true;
        rep.casimirs_included = rep.casimirs_included && found;
    }
    rep.inclusion = mf_inclusion_check(alg, mf, sub);
    rep.holds = rep.hypothesis_met && rep.casimirs_included && rep.inclusion.centralizer &&
                rep.inclusion.generators_invariant;
    if (!rep.hypothesis_met) {
        rep.certificate = "hypothesis fails: orbit dimension " + std::to_string(rep.d_a) + " != rank " +
                          std::to_string(rep.rank);
    } else if (rep.holds) {
        rep.certificate = "invariants(G) in F_mu in invariants(A): " + std::to_string(cas.size()) +
                          " Casimirs are shift coefficients of order 0; " + std::to_string(mf.generators.size()) +
                          " shift generators are invariant under " + std::to_string(sub.dim()) +
                          " subalgebra operators; refined chain B in F_mu in S(g)^A in S(g)";
    } else {
        rep.certificate = "inclusion fails";
    }
    return rep;
}

}  // namespace lpc

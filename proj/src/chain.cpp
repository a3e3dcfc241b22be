#include "lpc/chain.hpp"

#include "lpc/error.hpp"
#include "lpc/poly_span.hpp"

#include <algorithm>
#include <numeric>

namespace lpc {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Superintegrable: return "superintegrable";
        case Verdict::NotSuperintegrable: return "not superintegrable";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Superintegrable: return 0;
        case Verdict::NotSuperintegrable: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 2;
}

std::string to_string(BaseKind k) {
    switch (k) {
        case BaseKind::Casimirs: return "casimirs";
        case BaseKind::MomentMap: return "moment-map";
        case BaseKind::Explicit: return "explicit";
        case BaseKind::ShiftAlgebra: return "mf";
    }
    return "explicit";
}

std::string to_string(Existence e) {
    switch (e) {
        case Existence::Exists: return "exists";
        case Existence::DoesNotExist: return "does not exist";
        case Existence::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::size_t trdeg(const GeneratorSet& gens, const SamplingOptions& opts) {
    return jacobian_rank(gens.polys(), gens.nvars, opts);
}

unsigned default_degree_cap(const LieAlgebra& alg, const SamplingOptions& opts) {
    return static_cast<unsigned>(std::max<std::size_t>(3, algebra_rank(alg, opts) + 1));
}

CenterReport base_center_check(const LieAlgebra& alg, const GeneratorSet& base, const GeneratorSet& intermediate) {
    CenterReport rep;
    for (std::size_t b = 0; b < base.size(); ++b)
        for (std::size_t a = 0; a < intermediate.size(); ++a) {
            ++rep.checked;
            Polynomial br = lie_poisson_bracket(base.generators[b].poly, intermediate.generators[a].poly, alg);
            if (!br.is_zero()) rep.failures.push_back({b, a, std::move(br)});
        }
    return rep;
}

GeneratorSet moment_map_generators(const LieAlgebra& alg, const SubalgebraSpec& sub) {
    for (std::size_t i = 0; i < sub.dim(); ++i)
        for (std::size_t j = i + 1; j < sub.dim(); ++j) {
            Vector br = alg.bracket(sub.vectors[i], sub.vectors[j]);
            if (std::any_of(br.begin(), br.end(), [](const Rational& c) { return c != 0; }))
                throw HypothesisError("moment-map base needs an abelian subalgebra; basis vectors " +
                                      std::to_string(i) + " and " + std::to_string(j) + " do not commute");
        }
    std::vector<Polynomial> polys;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < sub.dim(); ++j) {
        polys.push_back(linear_polynomial(alg, sub.vectors[j]));
        labels.push_back("mu_" + std::to_string(j + 1));
    }
    return GeneratorSet::from_polys(alg.dim(), polys, labels);
}

GeneratorSet build_base(const ChainSpec& spec, unsigned max_degree) {
    const LieAlgebra& alg = *spec.algebra;
    switch (spec.base.kind) {
        case BaseKind::Casimirs:
            return casimirs_by_kernel(alg, max_degree, spec.options).as_generator_set();
        case BaseKind::MomentMap:
            return moment_map_generators(alg, spec.subalgebra);
        case BaseKind::ShiftAlgebra: {
            if (!spec.base.shift) throw ConfigurationError("shift-algebra base needs a shift vector");
            CasimirSet cas = casimirs_by_kernel(alg, max_degree, spec.options);
            return mf_generators(alg, cas, *spec.base.shift).as_generator_set();
        }
        case BaseKind::Explicit:
            if (!spec.base.explicit_generators) throw ConfigurationError("explicit base needs generators");
            if (spec.base.explicit_generators->nvars != alg.dim())
                throw DimensionMismatch(alg.dim(), spec.base.explicit_generators->nvars);
            return *spec.base.explicit_generators;
    }
    throw ConfigurationError("unknown base kind");
}

ChainReport verify_chain(const LieAlgebra& alg, const SubalgebraSpec& sub, const GeneratorSet& intermediate,
                         const GeneratorSet& base, unsigned max_degree, const std::string& base_kind,
                         const SamplingOptions& opts) {
    ChainReport rep;
    rep.algebra = alg.name();
    rep.dim = alg.dim();
    rep.rank = algebra_rank(alg, opts);
    rep.d_a = orbit_dimension(alg, sub, opts);
    rep.max_degree = max_degree;
    rep.base_kind = base_kind;
    rep.intermediate = intermediate;
    rep.base = base;
    rep.centrality = base_center_check(alg, base, intermediate);
    rep.trdeg_intermediate = trdeg(intermediate, opts);
    rep.trdeg_base = trdeg(base, opts);
    rep.dim_identity = rep.trdeg_intermediate + rep.trdeg_base == rep.dim;
    rep.base_matches_orbit = rep.trdeg_base == rep.d_a;
    rep.intermediate_complete = rep.trdeg_intermediate + rep.d_a == rep.dim;

    if (!rep.centrality.passed())
        rep.verdict = Verdict::NotSuperintegrable;
    else if (rep.dim_identity)
        rep.verdict = Verdict::Superintegrable;
    else if (!rep.intermediate_complete)
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = Verdict::NotSuperintegrable;

    if (!rep.intermediate_complete)
        rep.notes.push_back("intermediate generators up to degree " + std::to_string(max_degree) +
                            " reach trdeg " + std::to_string(rep.trdeg_intermediate) + " < dim - d_A = " +
                            std::to_string(rep.dim - rep.d_a) + "; the degree cap may truncate them");
    if (rep.dim_identity != rep.base_matches_orbit)
        rep.notes.push_back("dimension identity and trdeg(base) = d_A disagree");
    if (alg.cartan_indices().empty())
        rep.notes.push_back("no Cartan subalgebra flagged; the subalgebra is user-declared and maximality is not certified");
    if (!rep.centrality.passed())
        rep.notes.push_back(std::to_string(rep.centrality.failures.size()) + " of " +
                            std::to_string(rep.centrality.checked) + " base/intermediate brackets are nonzero");
    rep.notes.push_back("trdeg values are generic Jacobian ranks (certified lower bounds)");
    return rep;
}

ChainReport verify_chain(const ChainSpec& spec) {
    if (!spec.algebra) throw ConfigurationError("chain has no algebra");
    const LieAlgebra& alg = *spec.algebra;
    check_subalgebra(alg, spec.subalgebra);
    unsigned cap = spec.max_degree ? spec.max_degree : default_degree_cap(alg, spec.options.sampling);
    GeneratorSet intermediate = generate(alg, spec.subalgebra, cap, spec.options);
    GeneratorSet base = build_base(spec, cap);
    for (const auto& g : base.generators)
        if (!is_invariant(alg, spec.subalgebra, g.poly))
            throw IllFormedChain("base generator '" + g.label + "' is not invariant under the subalgebra", g.label);
    return verify_chain(alg, spec.subalgebra, intermediate, base, cap, to_string(spec.base.kind),
                        spec.options.sampling);
}

ChainReport torus_chain(const LieAlgebra& alg, unsigned max_degree, const CommutantOptions& opts) {
    ChainSpec spec;
    spec.algebra = std::make_shared<LieAlgebra>(alg);
    spec.subalgebra = SubalgebraSpec::cartan(alg);
    spec.base.kind = BaseKind::Casimirs;
    spec.max_degree = max_degree;
    spec.options = opts;
    ChainReport rep = verify_chain(spec);
    std::size_t r = spec.subalgebra.dim();
    if (rep.trdeg_base != r)
        rep.notes.push_back("expected trdeg(base) = rank = " + std::to_string(r));
    if (rep.trdeg_intermediate != rep.dim - r)
        rep.notes.push_back("expected trdeg(intermediate) = dim - rank = " + std::to_string(rep.dim - r));
    return rep;
}

ChainReport moment_map_base(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree,
                            const CommutantOptions& opts) {
    moment_map_generators(alg, sub);  // hypothesis check before the expensive part
    ChainSpec spec;
    spec.algebra = std::make_shared<LieAlgebra>(alg);
    spec.subalgebra = sub;
    spec.base.kind = BaseKind::MomentMap;
    spec.max_degree = max_degree;
    spec.options = opts;
    ChainReport rep = verify_chain(spec);
    if (rep.trdeg_base != sub.dim())
        rep.notes.push_back("expected trdeg(base) = dim a = " + std::to_string(sub.dim()));
    return rep;
}

ExistenceReport base_existence_verdict(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree,
                                       const CommutantOptions& opts) {
    ExistenceReport rep;
    rep.max_degree = max_degree ? max_degree : default_degree_cap(alg, opts.sampling);
    rep.d_a = orbit_dimension(alg, sub, opts.sampling);
    GeneratorSet intermediate = generate(alg, sub, rep.max_degree, opts);
    rep.trdeg_intermediate = trdeg(intermediate, opts.sampling);
    for (unsigned k = 1; k <= rep.max_degree; ++k)
        for (auto& p : poisson_center_basis(alg, sub, intermediate, k, opts)) rep.center_elements.push_back(std::move(p));
    rep.center_trdeg = jacobian_rank(rep.center_elements, alg.dim(), opts.sampling);
    if (rep.center_trdeg >= rep.d_a) {
        rep.verdict = Existence::Exists;
        rep.note = "center trdeg " + std::to_string(rep.center_trdeg) + " >= d_A " + std::to_string(rep.d_a);
    } else if (rep.trdeg_intermediate + rep.d_a < alg.dim()) {
        rep.verdict = Existence::Inconclusive;
        rep.note = "intermediate generators truncated at degree " + std::to_string(rep.max_degree);
    } else {
        rep.verdict = Existence::DoesNotExist;
        rep.note = "center trdeg " + std::to_string(rep.center_trdeg) + " < d_A " + std::to_string(rep.d_a) +
                   " (center elements up to degree " + std::to_string(rep.max_degree) + ")";
    }
    return rep;
}

std::vector<Polynomial> weyl_images(int n, const std::vector<int>& sigma) {
    if (sigma.size() != static_cast<std::size_t>(n)) throw DimensionMismatch(static_cast<std::size_t>(n), sigma.size());
    SlnLayout lay{n};
    const std::size_t dim = lay.dim();
    std::vector<Polynomial> images(dim, Polynomial(dim));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                images[lay.offdiag(i, j)] =
                    Polynomial::variable(dim, lay.offdiag(sigma[static_cast<std::size_t>(i - 1)] + 1,
                                                          sigma[static_cast<std::size_t>(j - 1)] + 1));
    // E_aa - E_(a+1)(a+1) maps to a traceless diagonal matrix D; its
    // coordinate on H_b is d_1 + ... + d_b.
    for (int a = 1; a < n; ++a) {
        std::vector<Rational> d(static_cast<std::size_t>(n));
        d[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a - 1)])] += 1;
        d[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])] -= 1;
        Rational acc = 0;
        for (int b = 1; b < n; ++b) {
            acc += d[static_cast<std::size_t>(b - 1)];
            if (acc != 0) images[lay.cartan(a)].add_term(Monomial::variable(static_cast<std::uint32_t>(lay.cartan(b))), acc);
        }
    }
    return images;
}

Polynomial reynolds_sln(int n, const Polynomial& p) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    Polynomial sum(p.nvars());
    Integer count = 0;
    do {
        sum += substitute(p, weyl_images(n, sigma));
        ++count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum * Rational(Integer(1), count);
}

ChainReport normalizer_chain_sln(int n, unsigned max_degree, const CommutantOptions& opts) {
    LieAlgebra alg = builtin_sl(n);
    SubalgebraSpec cartan = SubalgebraSpec::cartan(alg);
    // Weyl-invariant generators reach degree n + 1 before the transcendence
    // degree of the intermediate algebra is attained (sl(3) needs degree 4).
    unsigned cap = max_degree ? max_degree : static_cast<unsigned>(n + 1);
    const std::size_t dim = alg.dim();

    GeneratorSet weyl;
    weyl.nvars = dim;
    for (unsigned k = 1; k <= cap; ++k) {
        // Averaging a basis of the torus invariants spans all Weyl invariants
        // of degree k.
        PolySpan invariants(dim);
        for (const auto& p : invariant_basis(alg, cartan, k, opts)) invariants.insert(reynolds_sln(n, p));
        GeneratorProducts prods(weyl, opts.max_products);
        PolySpan decomposable(dim);
        for (const auto& e : prods.exponents(k)) decomposable.insert(prods.expand(e));
        PolySpan complement(dim);
        for (const auto& p : invariants.basis()) complement.insert(decomposable.reduce(p));
        std::size_t idx = 0;
        for (auto& p : complement.basis())
            weyl.generators.push_back({std::move(p), k, "w" + std::to_string(k) + "_" + std::to_string(++idx), true});
        weyl.kernel_dims[k] = invariants.dim();
    }
    GeneratorSet base = casimirs_by_kernel(alg, cap, opts).as_generator_set();
    ChainReport rep = verify_chain(alg, cartan, weyl, base, cap, "casimirs", opts.sampling);
    rep.notes.push_back("intermediate: Weyl-averaged torus invariants (normalizer of the torus)");
    return rep;
}

LeafDimension leaf_dimension(const LieAlgebra& alg, const SamplingOptions& opts) {
    LeafDimension out;
    long r = static_cast<long>(algebra_rank(alg, opts));
    out.value = static_cast<long>(alg.dim()) - 3 * r;
    out.valid = out.value >= 0;
    out.note = out.valid ? "dim g - 3 rank g" : "formula requires dim g >= 3 rank g";
    return out;
}

JMapReport j_map_casimir_check(const LieAlgebra& alg, unsigned max_degree, const CommutantOptions& opts) {
    SubalgebraSpec cartan = SubalgebraSpec::cartan(alg);
    unsigned cap = max_degree ? max_degree : default_degree_cap(alg, opts.sampling);
    JMapReport rep;
    rep.intermediate = generate(alg, cartan, cap, opts);
    for (std::size_t idx : alg.cartan_indices()) {
        rep.components.push_back(Polynomial::variable(alg.dim(), idx));
        rep.component_labels.push_back("mu_" + alg.labels()[idx]);
    }
    CasimirSet cas = casimirs_by_kernel(alg, cap, opts);
    for (const auto& l : cas.labels()) rep.component_labels.push_back(l);
    for (const auto& p : cas.generators) rep.components.push_back(p);
    rep.brackets = base_center_check(alg, GeneratorSet::from_polys(alg.dim(), rep.components, rep.component_labels),
                                     rep.intermediate);
    return rep;
}

std::vector<Polynomial> fiber_ideal_generators(const LieAlgebra& alg, const std::vector<Rational>& c,
                                               const std::vector<Rational>& alpha, unsigned max_degree,
                                               const CommutantOptions& opts) {
    const auto& cartan = alg.cartan_indices();
    if (cartan.empty()) throw ConfigurationError("fiber ideal needs a flagged Cartan subalgebra");
    unsigned cap = max_degree ? max_degree : default_degree_cap(alg, opts.sampling);
    CasimirSet cas = casimirs_by_kernel(alg, cap, opts);
    if (cas.size() != cartan.size())
        throw ConfigurationError("found " + std::to_string(cas.size()) + " Casimirs up to degree " +
                                 std::to_string(cap) + ", expected " + std::to_string(cartan.size()));
    if (c.size() != cas.size()) throw DimensionMismatch(cas.size(), c.size());
    if (alpha.size() != cartan.size()) throw DimensionMismatch(cartan.size(), alpha.size());
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < cas.size(); ++i)
        out.push_back(cas.generators[i] - Polynomial::constant(alg.dim(), c[i]));
    for (std::size_t i = 0; i < cartan.size(); ++i)
        out.push_back(Polynomial::variable(alg.dim(), cartan[i]) - Polynomial::constant(alg.dim(), alpha[i]));
    return out;
}

}  // namespace lpc

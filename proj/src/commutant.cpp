#include "lpc/commutant.hpp"

#include "lpc/error.hpp"
#include "lpc/linalg.hpp"
#include "lpc/poly_span.hpp"

#include <algorithm>

namespace lpc {

namespace {

Vector subalgebra_vector(const SubalgebraSpec& sub, std::size_t j) {
    if (j >= sub.dim()) throw InvalidParameter("subalgebra basis index " + std::to_string(j) + " out of range");
    return sub.vectors[j];
}

/// L_H as a derivation, split into the diagonal case (monomials are
/// eigenvectors) and the general case.
struct InvarianceOperator {
    bool diagonal = true;
    std::vector<Rational> weights;       // diagonal entries of ad(H)
    std::vector<Polynomial> images;      // L_H(x_k)
};

InvarianceOperator make_operator(const LieAlgebra& alg, const Vector& h) {
    if (h.size() != alg.dim()) throw DimensionMismatch(alg.dim(), h.size());
    Matrix ad = ad_matrix(alg, h);
    InvarianceOperator op;
    std::size_t n = alg.dim();
    op.weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial img(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& a = ad(i, k);
            if (a == 0) continue;
            img.add_term(Monomial::variable(static_cast<std::uint32_t>(i)), a);
            if (i != k) op.diagonal = false;
        }
        op.weights[k] = ad(k, k);
        op.images.push_back(std::move(img));
    }
    return op;
}

Polynomial apply_to_monomial(const Monomial& m, const InvarianceOperator& op, std::size_t n) {
    return apply_derivation(Polynomial::term(n, m, 1), op.images);
}

Rational monomial_weight(const Monomial& m, const InvarianceOperator& op) {
    Rational w = 0;
    for (const auto& [v, e] : m.factors()) w += op.weights[v] * e;
    return w;
}

/// Kernel of a sparse system whose columns are polynomials, returned as the
/// canonical reduced basis of the corresponding polynomial space.
std::vector<Polynomial> kernel_polys(const std::vector<SparseVector>& rows, const std::vector<Polynomial>& columns,
                                     std::size_t nvars) {
    std::vector<SparseVector> ker = sparse_nullspace(rows, columns.size());
    PolySpan span(nvars);
    for (const auto& v : ker) {
        Polynomial p(nvars);
        for (const auto& [c, val] : v) p.add_scaled(columns[c], val);
        span.insert(p);
    }
    return span.basis();
}

Polynomial tag_monomial(const std::vector<std::uint32_t>& e) {
    return Polynomial::term(e.size(), Monomial::from_exponents(e), 1);
}

void enumerate_weighted(const std::vector<unsigned>& weights, std::size_t limit, unsigned d, std::size_t idx,
                        std::vector<std::uint32_t>& cur, std::vector<std::vector<std::uint32_t>>& out,
                        std::size_t budget) {
    if (d == 0) {
        out.push_back(cur);
        if (out.size() > budget) throw ResourceError("generator product enumeration exceeds budget", 0);
        return;
    }
    if (idx >= limit) return;
    unsigned w = weights[idx];
    for (unsigned e = d / w + 1; e-- > 0;) {
        cur[idx] = e;
        enumerate_weighted(weights, limit, d - e * w, idx + 1, cur, out, budget);
    }
    cur[idx] = 0;
}

/// Span of all expanded products of weighted degree d, tagged by their
/// formal monomials.
PolySpan product_span(GeneratorProducts& prods, std::size_t nvars, unsigned d) {
    PolySpan span(nvars, prods.count());
    for (const auto& e : prods.exponents(d)) span.insert(prods.expand(e), tag_monomial(e));
    return span;
}

/// Complement of the products of `previous` inside span(invariants).
/// Remainders modulo the decomposable part contain no decomposable pivot, so
/// their reduced basis does not depend on how the invariants were chosen.
std::vector<Polynomial> complement_of_products(const std::vector<Polynomial>& invariants,
                                               const GeneratorSet& previous, unsigned k,
                                               const CommutantOptions& opts) {
    GeneratorProducts prods(previous, opts.max_products);
    PolySpan decomposable(previous.nvars);
    for (const auto& e : prods.exponents(k)) decomposable.insert(prods.expand(e));
    if (decomposable.dim() == invariants.size()) return {};
    PolySpan complement(previous.nvars);
    for (const auto& p : invariants) complement.insert(decomposable.reduce(p));
    return complement.basis();
}

}  // namespace

std::vector<Polynomial> invariance_images(const LieAlgebra& alg, const Vector& h) {
    return make_operator(alg, h).images;
}

Polynomial apply_invariance(const LieAlgebra& alg, const Vector& h, const Polynomial& p) {
    if (p.nvars() != alg.dim()) throw DimensionMismatch(alg.dim(), p.nvars());
    return apply_derivation(p, invariance_images(alg, h));
}

bool is_invariant(const LieAlgebra& alg, const SubalgebraSpec& sub, const Polynomial& p) {
    for (const auto& h : sub.vectors)
        if (!apply_invariance(alg, h, p).is_zero()) return false;
    return true;
}

Rational OperatorMatrix::entry(std::size_t row, std::size_t col) const {
    for (const auto& [r, v] : columns.at(col))
        if (r == row) return v;
    return 0;
}

OperatorMatrix operator_matrix(const LieAlgebra& alg, const Vector& h, unsigned k) {
    InvarianceOperator op = make_operator(alg, h);
    std::size_t n = alg.dim();
    OperatorMatrix out;
    out.basis = monomials_of_degree(n, k);
    std::map<Monomial, std::size_t, GrlexLess> index;
    for (std::size_t c = 0; c < out.basis.size(); ++c) index.emplace(out.basis[c], c);
    for (const auto& m : out.basis) {
        SparseVector col;
        Polynomial img = apply_to_monomial(m, op, n);
        for (const auto& [mm, v] : img.terms()) col.emplace_back(index.at(mm), v);
        out.columns.push_back(std::move(col));
    }
    return out;
}

OperatorMatrix operator_matrix(const LieAlgebra& alg, const SubalgebraSpec& sub, std::size_t j, unsigned k) {
    return operator_matrix(alg, subalgebra_vector(sub, j), k);
}

std::vector<Polynomial> invariant_basis(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned k,
                                        const CommutantOptions& opts) {
    std::size_t n = alg.dim();
    std::vector<InvarianceOperator> ops;
    for (const auto& h : sub.vectors) ops.push_back(make_operator(alg, h));

    // Diagonal operators are handled by a weight filter; only the remaining
    // monomials enter the elimination.
    std::vector<Monomial> columns;
    for (const auto& m : monomials_of_degree(n, k)) {
        bool keep = true;
        for (const auto& op : ops)
            if (op.diagonal && monomial_weight(m, op) != 0) {
                keep = false;
                break;
            }
        if (keep) columns.push_back(m);
    }
    if (columns.size() > opts.max_columns)
        throw ResourceError("invariant computation needs " + std::to_string(columns.size()) +
                                " monomial columns, budget is " + std::to_string(opts.max_columns),
                            k);

    std::vector<std::map<Monomial, SparseVector, GrlexLess>> row_maps;
    for (const auto& op : ops) {
        if (op.diagonal) continue;
        auto& rows = row_maps.emplace_back();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            Polynomial img = apply_to_monomial(columns[c], op, n);
            for (const auto& [m, v] : img.terms()) rows[m].emplace_back(c, v);
        }
    }

    std::vector<Polynomial> out;
    if (row_maps.empty()) {
        for (auto it = columns.rbegin(); it != columns.rend(); ++it) out.push_back(Polynomial::term(n, *it, 1));
        return out;
    }

    std::vector<SparseVector> rows;
    for (auto& rm : row_maps)
        for (auto& [m, r] : rm) rows.push_back(std::move(r));
    // Short rows first keeps the fill-in of the fraction-free elimination low.
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseVector& a, const SparseVector& b) { return a.size() < b.size(); });

    // Columns are in ascending graded-lex order, so the kernel basis of the
    // echelon structure already has the canonical form.
    for (const auto& v : sparse_nullspace(rows, columns.size())) {
        Polynomial p(n);
        for (const auto& [c, val] : v) p.add_term(columns[c], val);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return GrlexLess{}(b.leading().first, a.leading().first);
    });
    return out;
}

std::vector<Polynomial> GeneratorSet::polys() const {
    std::vector<Polynomial> out;
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
}

std::vector<std::string> GeneratorSet::labels() const {
    std::vector<std::string> out;
    for (const auto& g : generators) out.push_back(g.label);
    return out;
}

std::map<unsigned, std::size_t> GeneratorSet::indecomposable_counts() const {
    std::map<unsigned, std::size_t> out;
    for (const auto& g : generators)
        if (g.indecomposable) ++out[g.degree];
    return out;
}

GeneratorSet GeneratorSet::from_polys(std::size_t nvars, const std::vector<Polynomial>& polys,
                                      std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != polys.size()) throw DimensionMismatch(polys.size(), labels.size());
    GeneratorSet gs;
    gs.nvars = nvars;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Polynomial& p = polys[i];
        if (p.nvars() != nvars) throw DimensionMismatch(nvars, p.nvars());
        auto deg = p.degree();
        if (!deg || *deg == 0) throw InvalidParameter("generator " + std::to_string(i) + " is constant");
        if (!p.is_homogeneous()) throw InvalidParameter("generator " + std::to_string(i) + " is not homogeneous");
        gs.generators.push_back({p, *deg, labels.empty() ? "g" + std::to_string(i + 1) : labels[i], true});
    }
    return gs;
}

GeneratorProducts::GeneratorProducts(const GeneratorSet& gens, std::size_t max_products)
    : nvars_(gens.nvars), max_products_(max_products) {
    for (const auto& g : gens.generators) {
        if (g.degree == 0) throw InvalidParameter("generator '" + g.label + "' has degree 0");
        polys_.push_back(g.poly);
        weights_.push_back(g.degree);
    }
}

std::vector<std::vector<std::uint32_t>> GeneratorProducts::exponents(unsigned d, std::size_t only_below) const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(weights_.size(), 0);
    try {
        enumerate_weighted(weights_, std::min(only_below, weights_.size()), d, 0, cur, out, max_products_);
    } catch (const ResourceError&) {
        throw ResourceError("generator products exceed budget of " + std::to_string(max_products_), d);
    }
    return out;
}

const Polynomial& GeneratorProducts::expand(const std::vector<std::uint32_t>& e) {
    if (e.size() != weights_.size()) throw DimensionMismatch(weights_.size(), e.size());
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    std::size_t last = e.size();
    while (last > 0 && e[last - 1] == 0) --last;
    Polynomial value = Polynomial::constant(nvars_, 1);
    if (last > 0) {
        std::vector<std::uint32_t> smaller = e;
        --smaller[last - 1];
        value = expand(smaller) * polys_[last - 1];
    }
    return cache_.emplace(e, std::move(value)).first->second;
}

std::vector<Polynomial> indecomposables(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned k,
                                        const GeneratorSet& previous, const CommutantOptions& opts) {
    return complement_of_products(invariant_basis(alg, sub, k, opts), previous, k, opts);
}

GeneratorSet generate(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree,
                      const CommutantOptions& opts) {
    GeneratorSet gs;
    gs.nvars = alg.dim();
    gs.provenance = GeneratorSet::Provenance{std::make_shared<LieAlgebra>(alg), sub, max_degree};
    gs.kernel_dims[0] = 1;
    for (unsigned k = 1; k <= max_degree; ++k) {
        std::vector<Polynomial> invariants = invariant_basis(alg, sub, k, opts);
        gs.kernel_dims[k] = invariants.size();
        std::size_t idx = 0;
        for (auto& p : complement_of_products(invariants, gs, k, opts))
            gs.generators.push_back({std::move(p), k, "q" + std::to_string(k) + "_" + std::to_string(++idx), true});
    }
    return gs;
}

RelationSet relation_basis(const GeneratorSet& gens, unsigned max_degree, const CommutantOptions& opts) {
    RelationSet out;
    out.generator_labels = gens.labels();
    out.max_degree = max_degree;
    std::size_t m = gens.size();
    GeneratorProducts prods(gens, opts.max_products);
    std::vector<unsigned> weights;
    for (const auto& g : gens.generators) weights.push_back(g.degree);

    for (unsigned d = 1; d <= max_degree; ++d) {
        PolySpan span(gens.nvars, m);
        std::vector<Polynomial> dependencies;
        for (const auto& e : prods.exponents(d)) {
            auto r = span.insert(prods.expand(e), tag_monomial(e));
            if (r.remainder.is_zero()) dependencies.push_back(std::move(r.tag));
        }
        if (dependencies.empty()) continue;

        PolySpan ideal(m);
        for (std::size_t r = 0; r < out.relations.size(); ++r) {
            unsigned dr = out.degrees[r];
            if (dr >= d) continue;
            for (const auto& e : prods.exponents(d - dr))
                ideal.insert(out.relations[r] * tag_monomial(e));
        }
        for (const auto& dep : dependencies) {
            Polynomial red = ideal.reduce(dep);
            if (red.is_zero()) continue;
            ideal.insert(red);
            out.relations.push_back(red.monic());
            out.degrees.push_back(d);
        }
    }
    return out;
}

Polynomial evaluate_relation(const Polynomial& relation, const GeneratorSet& gens) {
    if (relation.nvars() != gens.size()) throw DimensionMismatch(gens.size(), relation.nvars());
    return substitute(relation, gens.polys());
}

MembershipResult membership(const Polynomial& p, const GeneratorSet& gens, unsigned max_degree,
                            const CommutantOptions& opts) {
    if (p.nvars() != gens.nvars) throw DimensionMismatch(gens.nvars, p.nvars());
    MembershipResult res;
    if (gens.provenance && gens.provenance->algebra &&
        !is_invariant(*gens.provenance->algebra, gens.provenance->subalgebra, p)) {
        res.note = "not invariant under the subalgebra";
        return res;
    }
    std::size_t m = gens.size();
    GeneratorProducts prods(gens, opts.max_products);
    Polynomial expr(m);
    for (const auto& [d, comp] : homogeneous_components(p)) {
        if (d == 0) {
            expr += Polynomial::constant(m, comp.coefficient(Monomial{}));
            continue;
        }
        if (d > max_degree) {
            res.note = "not found up to degree " + std::to_string(max_degree);
            return res;
        }
        PolySpan span = product_span(prods, gens.nvars, d);
        auto r = span.reduce(comp, Polynomial(m));
        if (!r.remainder.is_zero()) {
            res.note = "not found up to degree " + std::to_string(max_degree);
            return res;
        }
        expr -= r.tag;
    }
    res.found = true;
    res.expression = std::move(expr);
    return res;
}

ClosureReport bracket_closure_check(const LieAlgebra& alg, const GeneratorSet& gens, unsigned max_degree,
                                    const CommutantOptions& opts) {
    if (gens.nvars != alg.dim()) throw DimensionMismatch(alg.dim(), gens.nvars);
    ClosureReport rep;
    GeneratorProducts prods(gens, opts.max_products);
    std::map<unsigned, PolySpan> spans;
    for (std::size_t u = 0; u < gens.size(); ++u) {
        for (std::size_t v = u + 1; v < gens.size(); ++v) {
            ClosureEntry entry;
            entry.u = u;
            entry.v = v;
            entry.bracket = lie_poisson_bracket(gens.generators[u].poly, gens.generators[v].poly, alg);
            if (entry.bracket.is_zero()) {
                entry.zero = entry.expressible = true;
                entry.expression = Polynomial(gens.size());
                ++rep.zero_brackets;
            } else {
                unsigned d = gens.generators[u].degree + gens.generators[v].degree - 1;
                if (d <= max_degree) {
                    auto it = spans.find(d);
                    if (it == spans.end()) it = spans.emplace(d, product_span(prods, gens.nvars, d)).first;
                    auto r = it->second.reduce(entry.bracket, Polynomial(gens.size()));
                    if (r.remainder.is_zero()) {
                        entry.expressible = true;
                        entry.expression = -r.tag;
                    }
                }
            }
            rep.closed = rep.closed && entry.expressible;
            rep.entries.push_back(std::move(entry));
        }
    }
    return rep;
}

std::vector<Polynomial> poisson_center_basis(const LieAlgebra& alg, const SubalgebraSpec& sub,
                                             const GeneratorSet& gens, unsigned k, const CommutantOptions& opts) {
    std::vector<Polynomial> invariants = invariant_basis(alg, sub, k, opts);
    if (invariants.empty()) return {};
    std::vector<SparseVector> rows;
    for (const auto& g : gens.generators) {
        std::map<Monomial, SparseVector, GrlexLess> by_monomial;
        for (std::size_t i = 0; i < invariants.size(); ++i) {
            Polynomial b = lie_poisson_bracket(invariants[i], g.poly, alg);
            for (const auto& [m, v] : b.terms()) by_monomial[m].emplace_back(i, v);
        }
        for (auto& [m, r] : by_monomial) rows.push_back(std::move(r));
    }
    return kernel_polys(rows, invariants, alg.dim());
}

}  // namespace lpc

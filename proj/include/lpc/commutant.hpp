#pragma once

#include "lpc/algebra.hpp"
#include "lpc/polynomial.hpp"
#include "lpc/sampling.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lpc {

struct CommutantOptions {
    /// Upper bound on the monomial columns of one kernel computation.
    std::size_t max_columns = 250000;
    /// Upper bound on generator products enumerated in one weighted degree.
    std::size_t max_products = 200000;
    SamplingOptions sampling;
};

// ---------------------------------------------------------------------------
// Invariance operators
//
// For H = sum_j h_j X_j the operator L_H = {x_H, .} acts on coordinates by
// L_H(x_k) = sum_i (sum_j h_j C_jk^i) x_i, i.e. x_k transforms like X_k under
// ad(H), and extends to S(g) as a derivation.

/// Images L_H(x_k) for every coordinate.
std::vector<Polynomial> invariance_images(const LieAlgebra& alg, const Vector& h);
Polynomial apply_invariance(const LieAlgebra& alg, const Vector& h, const Polynomial& p);
bool is_invariant(const LieAlgebra& alg, const SubalgebraSpec& sub, const Polynomial& p);

/// Matrix of L_H on the degree-k monomial basis.
struct OperatorMatrix {
    std::vector<Monomial> basis;          // ascending graded-lex
    std::vector<SparseVector> columns;    // column c = coordinates of L_H(basis[c])

    Rational entry(std::size_t row, std::size_t col) const;
    std::size_t size() const { return basis.size(); }
};

OperatorMatrix operator_matrix(const LieAlgebra& alg, const Vector& h, unsigned k);
/// Operator of the j-th basis vector (0-based) of the subalgebra.
OperatorMatrix operator_matrix(const LieAlgebra& alg, const SubalgebraSpec& sub, std::size_t j, unsigned k);

/// Basis of the degree-k invariants: the joint kernel of all L_{H_j}.
/// Returned in reduced echelon form (monic, ordered by decreasing leading
/// monomial), so the result does not depend on the elimination path.
std::vector<Polynomial> invariant_basis(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned k,
                                        const CommutantOptions& opts = {});

// ---------------------------------------------------------------------------
// Generator sets

struct Generator {
    Polynomial poly;
    unsigned degree = 0;
    std::string label;
    bool indecomposable = true;
};

struct GeneratorSet {
    struct Provenance {
        std::shared_ptr<const LieAlgebra> algebra;
        SubalgebraSpec subalgebra;
        unsigned max_degree = 0;
    };

    std::size_t nvars = 0;
    std::vector<Generator> generators;
    std::optional<Provenance> provenance;
    std::map<unsigned, std::size_t> kernel_dims;

    std::size_t size() const { return generators.size(); }
    bool empty() const { return generators.empty(); }
    std::vector<Polynomial> polys() const;
    std::vector<std::string> labels() const;
    std::map<unsigned, std::size_t> indecomposable_counts() const;

    /// Builds a set from explicit homogeneous polynomials; labels default
    /// to "g1", "g2", ... Throws InvalidParameter on inhomogeneous input.
    static GeneratorSet from_polys(std::size_t nvars, const std::vector<Polynomial>& polys,
                                   std::vector<std::string> labels = {});
};

/// Complement of the decomposable part inside the degree-k invariants.
/// `previous` must contain all generators of degree < k.
std::vector<Polynomial> indecomposables(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned k,
                                        const GeneratorSet& previous, const CommutantOptions& opts = {});

/// Indecomposable invariants of every degree 1..max_degree.
GeneratorSet generate(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree,
                      const CommutantOptions& opts = {});

// ---------------------------------------------------------------------------
// Products of generators

/// Enumerates and expands monomials a^e in formal generator variables with
/// weight(a_i) = deg p_i. Expansions are cached.
class GeneratorProducts {
public:
    explicit GeneratorProducts(const GeneratorSet& gens, std::size_t max_products = 200000);

    /// Exponent vectors of weighted degree d in a fixed deterministic order.
    /// Generators with index >= `only_below` are skipped when given.
    std::vector<std::vector<std::uint32_t>> exponents(unsigned d, std::size_t only_below = SIZE_MAX) const;
    const Polynomial& expand(const std::vector<std::uint32_t>& e);
    std::size_t count() const { return weights_.size(); }

private:
    std::vector<Polynomial> polys_;
    std::vector<unsigned> weights_;
    std::size_t nvars_;
    std::size_t max_products_;
    std::map<std::vector<std::uint32_t>, Polynomial> cache_;
};

/// Polynomial relations among generators, in formal variables a_1..a_m
/// (a_i <-> generators[i-1]).
struct RelationSet {
    std::vector<std::string> generator_labels;
    std::vector<Polynomial> relations;
    std::vector<unsigned> degrees;  // weighted degree of each relation
    unsigned max_degree = 0;
};

/// For each weighted degree <= max_degree, the linear dependencies among
/// expanded generator monomials, excluding multiples of relations found in
/// lower degrees. Throws ResourceError when a degree exceeds the budget.
RelationSet relation_basis(const GeneratorSet& gens, unsigned max_degree, const CommutantOptions& opts = {});

/// Substitutes the generators into a relation (zero for a true relation).
Polynomial evaluate_relation(const Polynomial& relation, const GeneratorSet& gens);

struct MembershipResult {
    bool found = false;
    std::optional<Polynomial> expression;  // in formal generator variables
    std::string note;
};

/// Expresses p as a polynomial in the generators with weighted degree <= max_degree.
/// "Not found" is inconclusive unless the note says p is not invariant.
MembershipResult membership(const Polynomial& p, const GeneratorSet& gens, unsigned max_degree,
                            const CommutantOptions& opts = {});

struct ClosureEntry {
    std::size_t u = 0;
    std::size_t v = 0;
    Polynomial bracket;
    bool zero = false;
    bool expressible = false;
    std::optional<Polynomial> expression;
};

struct ClosureReport {
    std::vector<ClosureEntry> entries;
    bool closed = true;
    std::size_t zero_brackets = 0;
};

/// Brackets of every generator pair, each expressed in the generators.
ClosureReport bracket_closure_check(const LieAlgebra& alg, const GeneratorSet& gens, unsigned max_degree,
                                    const CommutantOptions& opts = {});

/// Degree-k invariants whose bracket with every generator vanishes.
std::vector<Polynomial> poisson_center_basis(const LieAlgebra& alg, const SubalgebraSpec& sub,
                                             const GeneratorSet& gens, unsigned k,
                                             const CommutantOptions& opts = {});

}  // namespace lpc

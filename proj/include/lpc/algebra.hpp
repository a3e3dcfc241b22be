#pragma once

#include "lpc/linalg.hpp"
#include "lpc/polynomial.hpp"
#include "lpc/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpc {

/// C_ij^k with i < j; [X_i, X_j] = sum_k C_ij^k X_k.
struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational c;
};

/// A finite-dimensional Lie algebra given by sparse structure constants in a
/// fixed ordered basis. Immutable after construction.
class LieAlgebra {
public:
    /// Entries must have i < j and no duplicate (i, j, k); zero coefficients
    /// are dropped. Throws InvalidParameter otherwise.
    LieAlgebra(std::string name, std::vector<std::string> labels,
               std::vector<StructureConstant> entries, std::vector<std::size_t> cartan_indices = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<StructureConstant>& entries() const noexcept { return entries_; }
    const std::vector<std::size_t>& cartan_indices() const noexcept { return cartan_; }
    std::optional<std::size_t> label_index(std::string_view label) const;

    /// Coordinates of [X_i, X_j] (antisymmetric in i, j).
    const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// Bracket of two elements given in basis coordinates.
    Vector bracket(const Vector& x, const Vector& y) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<StructureConstant> entries_;
    std::vector<std::size_t> cartan_;
    std::vector<SparseVector> table_;
};

struct ValidationCheck {
    bool passed = true;
    std::string detail;
    std::vector<std::size_t> witness;  // first violating index tuple
};

struct ValidationReport {
    ValidationCheck antisymmetry;
    ValidationCheck jacobi;
    ValidationCheck killing_nondegenerate;

    bool semisimple() const { return all_passed(); }
    bool all_passed() const {
        return antisymmetry.passed && jacobi.passed && killing_nondegenerate.passed;
    }
};

ValidationReport validate_algebra(const LieAlgebra& alg);

/// sl(n) with basis h_1..h_{n-1} (H_i = E_ii - E_{i+1,i+1}) followed by
/// e_ij (i != j) in lexicographic order. The Cartan indices are flagged.
LieAlgebra builtin_sl(int n);

/// Defining-representation matrices of the builtin sl(n) basis.
std::vector<Matrix> sln_matrix_basis(int n);

/// Variable layout of builtin_sl(n); indices are 1-based as in E_ij.
struct SlnLayout {
    int n;
    std::size_t cartan(int i) const { return static_cast<std::size_t>(i - 1); }
    std::size_t offdiag(int i, int j) const;
    /// (i, j) of an off-diagonal variable, nullopt for Cartan variables.
    std::optional<std::pair<int, int>> edge(std::size_t var) const;
    std::size_t dim() const { return static_cast<std::size_t>(n * n - 1); }
};

LieAlgebra abelian_algebra(std::size_t n);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Symmetric bilinear form on g in the algebra basis.
struct BilinearForm {
    Matrix matrix;
};

/// B(X, Y) = tr(ad X ad Y).
BilinearForm killing_form(const LieAlgebra& alg);
/// tr(XY) in the defining representation of sl(n).
BilinearForm trace_form_sln(int n);
/// Whether B([Z,X],Y) + B(X,[Z,Y]) = 0 for all basis triples.
bool is_ad_invariant(const LieAlgebra& alg, const BilinearForm& form);

/// ad(H) in the basis: column k holds the coordinates of [H, X_k].
Matrix ad_matrix(const LieAlgebra& alg, const Vector& h);

/// A_ij(x) = sum_l C_ij^l x_l.
Matrix commutator_matrix(const LieAlgebra& alg, std::span<const Rational> x);

/// Span of the given vectors of g. Flags record declared properties.
struct SubalgebraSpec {
    std::vector<Vector> vectors;
    bool abelian = false;
    bool torus = false;
    bool full = false;

    std::size_t dim() const { return vectors.size(); }

    static SubalgebraSpec cartan(const LieAlgebra& alg);
    static SubalgebraSpec whole(const LieAlgebra& alg);
    static SubalgebraSpec zero() { return {}; }
    static SubalgebraSpec span(std::vector<Vector> vectors, bool abelian = false, bool torus = false);
};

/// Throws InvalidParameter if the vectors are dependent, not closed under
/// the bracket, or flagged abelian without commuting.
void check_subalgebra(const LieAlgebra& alg, const SubalgebraSpec& sub);

/// Generic dimension of A-orbits: generic rank of the s x n matrix whose
/// rows are the invariance vector fields of the subalgebra basis.
std::size_t orbit_dimension(const LieAlgebra& alg, const SubalgebraSpec& sub,
                            const SamplingOptions& opts = {});

/// rank(g): size of the flagged Cartan subalgebra if present, otherwise
/// dim g minus the generic rank of the commutator matrix.
std::size_t algebra_rank(const LieAlgebra& alg, const SamplingOptions& opts = {});

/// Whether rank(A(mu)) = dim - rank(g). Without an explicit rank the flagged
/// Cartan subalgebra is used; throws ConfigurationError if neither exists.
bool is_regular(const LieAlgebra& alg, std::span<const Rational> mu,
                std::optional<std::size_t> rank_g = std::nullopt);

/// Coordinates in g of the element identified with mu in g* via B.
Vector transport_to_algebra(const BilinearForm& form, std::span<const Rational> mu);

/// Whether [H_j, B^{-1} mu] = 0 for every basis vector of the subalgebra.
bool in_centralizer(const LieAlgebra& alg, const SubalgebraSpec& sub, std::span<const Rational> mu,
                    const BilinearForm& form);
bool in_centralizer(const LieAlgebra& alg, const SubalgebraSpec& sub, std::span<const Rational> mu);

/// Rewrites a polynomial function on g (variables = basis coordinates of X)
/// in g*-coordinates by substituting X-coordinates = B^{-1} x.
Polynomial dual_transport(const LieAlgebra& alg, const BilinearForm& form, const Polynomial& on_g);
/// Inverse of dual_transport: substitutes x = B X-coordinates.
Polynomial dual_transport_inverse(const LieAlgebra& alg, const BilinearForm& form,
                                  const Polynomial& on_dual);

/// The linear polynomial x_H = sum_j h_j x_j, i.e. H as an element of S^1(g).
Polynomial linear_polynomial(const LieAlgebra& alg, const Vector& h);

}  // namespace lpc

#pragma once

#include "lpc/algebra.hpp"
#include "lpc/commutant.hpp"
#include "lpc/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lpc {

enum class CasimirMethod { Kernel, TraceTransport };
std::string to_string(CasimirMethod m);

struct CasimirSet {
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;  // homogeneous
    std::vector<unsigned> degrees;
    CasimirMethod method = CasimirMethod::Kernel;

    std::size_t size() const { return generators.size(); }
    /// Labels "C<degree>" (suffixed when a degree repeats).
    std::vector<std::string> labels() const;
    GeneratorSet as_generator_set() const;
};

/// Indecomposable generators of S(g)^g up to the degree cap, normalized to
/// leading graded-lex coefficient 1.
CasimirSet casimirs_by_kernel(const LieAlgebra& alg, unsigned max_degree, const CommutantOptions& opts = {});

/// tr(X^k) for 2 <= k <= max_k, computed in matrix entries of X in sl(n) and
/// moved to dual coordinates with the Killing form. Scale is left as computed.
CasimirSet trace_casimirs_sln(int n, unsigned max_k);

/// Coordinates x_i whose bracket with p is nonzero (empty iff p is central).
std::vector<std::size_t> noncentral_witnesses(const LieAlgebra& alg, const Polynomial& p);

struct CasimirCountReport {
    std::size_t found = 0;     // Jacobian rank of the Casimirs found
    std::size_t expected = 0;  // dim g - generic rank of the commutator matrix
    bool matches = false;
};

CasimirCountReport casimir_count_check(const LieAlgebra& alg, unsigned max_degree,
                                       const CommutantOptions& opts = {});

/// Argument-shift algebra. Generator i is the t^order coefficient of
/// P_source(x + t mu); zero coefficients are dropped.
struct MFAlgebra {
    Point shift;
    CasimirSet base;
    std::vector<Polynomial> generators;
    struct Origin {
        std::size_t casimir = 0;
        unsigned order = 0;
    };
    std::vector<Origin> origins;
    bool regular = false;

    std::vector<std::string> labels() const;
    GeneratorSet as_generator_set() const;
};

/// Coefficients of t^0 .. t^(deg-1) in p(x + t mu).
std::vector<Polynomial> shift_coefficients(const Polynomial& p, std::span<const Rational> mu);
/// sum_i mu_i dp/dx_i
Polynomial directional_derivative(const Polynomial& p, std::span<const Rational> mu);

MFAlgebra mf_generators(const LieAlgebra& alg, const CasimirSet& cas, const Point& mu);

struct PairBracket {
    std::size_t u = 0;
    std::size_t v = 0;
    Polynomial bracket;
};

struct CommutativityReport {
    std::size_t pairs_checked = 0;
    std::vector<PairBracket> nonzero;
    bool passed() const { return nonzero.empty(); }
};

CommutativityReport mf_commutativity_check(const LieAlgebra& alg, const MFAlgebra& mf);

struct MFRankReport {
    std::size_t rank = 0;
    std::size_t expected = 0;  // b(g) = (dim g + rank g) / 2
    bool regular = false;
    bool passed = false;       // regular and rank == expected
    std::size_t relations_found = 0;
    unsigned relation_degree = 0;
    std::string note;
};

MFRankReport mf_rank_check(const LieAlgebra& alg, const MFAlgebra& mf, unsigned relation_degree = 4,
                           const CommutantOptions& opts = {});

struct InclusionReport {
    bool centralizer = false;           // mu transported to g commutes with the subalgebra
    bool generators_invariant = false;  // every generator is killed by every L_j
    bool agreement = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (generator, subalgebra vector)
};

InclusionReport mf_inclusion_check(const LieAlgebra& alg, const MFAlgebra& mf, const SubalgebraSpec& sub);

struct SandwichReport {
    std::size_t d_a = 0;
    std::size_t rank = 0;
    bool hypothesis_met = false;  // d_A == rank g
    bool casimirs_included = false;
    InclusionReport inclusion;
    bool holds = false;
    std::string certificate;
};

SandwichReport sandwich_check(const LieAlgebra& alg, const CasimirSet& cas, const MFAlgebra& mf,
                              const SubalgebraSpec& sub, const SamplingOptions& opts = {});

}  // namespace lpc

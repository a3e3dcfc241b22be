#pragma once

#include "lpc/algebra.hpp"
#include "lpc/casimir_mf.hpp"
#include "lpc/commutant.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lpc {

enum class Verdict { Superintegrable, NotSuperintegrable, Inconclusive };
std::string to_string(Verdict v);
/// 0 superintegrable, 1 not, 2 inconclusive.
int exit_code(Verdict v);

/// Generic Jacobian rank (a certified lower bound for the transcendence degree).
std::size_t trdeg(const GeneratorSet& gens, const SamplingOptions& opts = {});

/// Degree cap used when none is given: max(3, rank g + 1), enough for all
/// fundamental Casimirs of sl(n).
unsigned default_degree_cap(const LieAlgebra& alg, const SamplingOptions& opts = {});

struct BracketFailure {
    std::size_t base = 0;
    std::size_t intermediate = 0;
    Polynomial bracket;
};

struct CenterReport {
    std::size_t checked = 0;
    std::vector<BracketFailure> failures;
    bool passed() const { return failures.empty(); }
};

/// Every {b, a} with b in `base`, a in `intermediate` must vanish.
CenterReport base_center_check(const LieAlgebra& alg, const GeneratorSet& base, const GeneratorSet& intermediate);

enum class BaseKind { Casimirs, MomentMap, Explicit, ShiftAlgebra };
std::string to_string(BaseKind k);

struct BaseSpec {
    BaseKind kind = BaseKind::Casimirs;
    std::optional<Point> shift;           // ShiftAlgebra
    std::optional<GeneratorSet> explicit_generators;  // Explicit
};

struct ChainSpec {
    std::shared_ptr<const LieAlgebra> algebra;
    SubalgebraSpec subalgebra;
    BaseSpec base;
    unsigned max_degree = 0;  // 0 selects default_degree_cap
    CommutantOptions options;
};

struct ChainReport {
    std::string algebra;
    std::size_t dim = 0;
    std::size_t rank = 0;
    std::size_t d_a = 0;
    unsigned max_degree = 0;
    std::string base_kind;
    GeneratorSet intermediate;
    GeneratorSet base;
    CenterReport centrality;
    std::size_t trdeg_intermediate = 0;
    std::size_t trdeg_base = 0;
    bool dim_identity = false;         // trdeg intermediate + trdeg base == dim
    bool base_matches_orbit = false;   // trdeg base == d_A
    bool intermediate_complete = false;  // trdeg intermediate == dim - d_A
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> notes;
};

/// Generators of the base algebra described by spec.base.
GeneratorSet build_base(const ChainSpec& spec, unsigned max_degree);

/// Decides superintegrability of base in S(g)^A in S(g). Throws
/// IllFormedChain when a base generator is not invariant under A.
ChainReport verify_chain(const ChainSpec& spec);
/// Same decision for precomputed generator sets.
ChainReport verify_chain(const LieAlgebra& alg, const SubalgebraSpec& sub, const GeneratorSet& intermediate,
                         const GeneratorSet& base, unsigned max_degree, const std::string& base_kind,
                         const SamplingOptions& opts = {});

/// Cartan commutant over the Casimirs.
ChainReport torus_chain(const LieAlgebra& alg, unsigned max_degree = 0, const CommutantOptions& opts = {});

/// x_H for each basis vector H of an abelian subalgebra.
GeneratorSet moment_map_generators(const LieAlgebra& alg, const SubalgebraSpec& sub);
/// Abelian chain with the moment-map base; HypothesisError if sub is not abelian.
ChainReport moment_map_base(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree = 0,
                            const CommutantOptions& opts = {});

enum class Existence { Exists, DoesNotExist, Inconclusive };
std::string to_string(Existence e);

struct ExistenceReport {
    std::size_t d_a = 0;
    std::size_t center_trdeg = 0;  // lower bound from center elements up to the cap
    std::size_t trdeg_intermediate = 0;
    unsigned max_degree = 0;
    std::vector<Polynomial> center_elements;
    Existence verdict = Existence::Inconclusive;
    std::string note;
};

ExistenceReport base_existence_verdict(const LieAlgebra& alg, const SubalgebraSpec& sub, unsigned max_degree = 0,
                                       const CommutantOptions& opts = {});

/// Action of a permutation of {0..n-1} on the coordinates of sl(n): images
/// of x_k under E_ij -> E_sigma(i) sigma(j).
std::vector<Polynomial> weyl_images(int n, const std::vector<int>& sigma);
/// Average of p over all permutations of the indices.
Polynomial reynolds_sln(int n, const Polynomial& p);

/// Normalizer-of-torus chain for sl(n): Weyl-averaged torus invariants up to
/// the cap as intermediate, Casimirs as base. The default cap is n + 1.
ChainReport normalizer_chain_sln(int n, unsigned max_degree = 0, const CommutantOptions& opts = {});

struct LeafDimension {
    long value = 0;  // dim g - 3 rank g
    bool valid = false;  // dim g >= 3 rank g
    std::string note;
};

LeafDimension leaf_dimension(const LieAlgebra& alg, const SamplingOptions& opts = {});

struct JMapReport {
    std::vector<std::string> component_labels;
    std::vector<Polynomial> components;  // x_H for the Cartan basis, then Casimirs
    GeneratorSet intermediate;
    CenterReport brackets;
    bool passed() const { return brackets.passed(); }
};

/// Checks that the Cartan linear functions and the Casimirs are central in
/// the Cartan commutant.
JMapReport j_map_casimir_check(const LieAlgebra& alg, unsigned max_degree = 0, const CommutantOptions& opts = {});

/// {C_i - c_i} and {x_{H_i} - alpha_i}; c and alpha have one entry per rank.
std::vector<Polynomial> fiber_ideal_generators(const LieAlgebra& alg, const std::vector<Rational>& c,
                                               const std::vector<Rational>& alpha, unsigned max_degree = 0,
                                               const CommutantOptions& opts = {});

}  // namespace lpc

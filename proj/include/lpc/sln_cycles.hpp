#pragma once

#include "lpc/commutant.hpp"
#include "lpc/polynomial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lpc {

/// Directed cycle i_1 -> i_2 -> ... -> i_d -> i_1 on 1-based matrix indices,
/// rotated so the smallest index comes first. Orientation is kept.
class CycleMonomial {
public:
    /// Throws InvalidParameter for fewer than 2 or repeated indices.
    explicit CycleMonomial(std::vector<int> indices);

    const std::vector<int>& indices() const noexcept { return indices_; }
    std::size_t length() const noexcept { return indices_.size(); }
    /// "p123"; indices are joined by '_' once n >= 10.
    std::string label(int n) const;
    /// x_{i1 i2} x_{i2 i3} ... x_{id i1} in the coordinates of sl(n).
    Monomial monomial(int n) const;

    friend bool operator==(const CycleMonomial&, const CycleMonomial&) = default;
    friend auto operator<=>(const CycleMonomial& a, const CycleMonomial& b) {
        if (a.indices_.size() != b.indices_.size()) return a.indices_.size() <=> b.indices_.size();
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<int> indices_;
};

/// Edge multiplicities m_ij of a monomial's off-diagonal variables.
struct ExponentGraph {
    int n = 0;
    std::map<std::pair<int, int>, std::uint32_t> edges;

    /// Cartan variables are ignored.
    static ExponentGraph from_monomial(int n, const Monomial& m);
    Monomial to_monomial() const;
    bool empty() const { return edges.empty(); }
};

/// In-degree equals out-degree at every vertex (torus invariance).
bool balance_check(int n, const Monomial& m);
bool balance_check(const ExponentGraph& g);

/// Greedy walk with smallest-successor choice; each revisited vertex closes a
/// cycle. The product of the result equals the input. Throws InvalidParameter
/// on unbalanced input.
std::vector<CycleMonomial> cycle_decompose(ExponentGraph g);

/// All oriented cycles of length 2..n up to rotation, ordered by length then
/// indices.
std::vector<CycleMonomial> enumerate_cycles(int n);
/// h_1..h_(n-1) followed by the cycle monomials.
GeneratorSet enumerate_cycle_generators(int n);

struct FamilyResult {
    std::string family;      // "i", "ii", "iii"
    std::string convention;  // how the printed index ranges were read
    bool applicable = true;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;
    bool holds() const { return applicable && failures == 0; }
};

struct RelationFamiliesReport {
    int n = 0;
    std::vector<FamilyResult> results;
    std::map<std::string, std::string> chosen;  // family -> first convention that holds
    /// Whether each chosen relation lies in the ideal spanned by relation_basis
    /// of the cycle generators (only for relations of weighted degree <= ideal_degree).
    std::size_t ideal_checked = 0;
    std::size_t ideal_missing = 0;
    unsigned ideal_degree = 0;
    bool passed = false;
};

/// Instantiates the three relation families at all index tuples and compares
/// both sides as monomials. Throws ResourceError when the number of instances
/// exceeds `budget`.
RelationFamiliesReport relation_families_check(int n, std::size_t budget = 100000, unsigned ideal_degree = 6);

struct OracleDegree {
    unsigned degree = 0;
    std::size_t monomials = 0;
    std::size_t balanced = 0;
    std::size_t kernel_dim = 0;
    std::size_t mismatches = 0;  // monomials where balance and invariance disagree
    bool same_span = false;
};

struct OracleReport {
    int n = 0;
    std::vector<OracleDegree> degrees;
    bool passed() const;
};

/// Balanced monomials against the kernel of the Cartan operators, degree by degree.
OracleReport oracle_cross_check(int n, unsigned k_max, const CommutantOptions& opts = {});

}  // namespace lpc

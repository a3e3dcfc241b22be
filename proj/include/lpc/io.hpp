#pragma once

#include "lpc/algebra.hpp"
#include "lpc/casimir_mf.hpp"
#include "lpc/chain.hpp"
#include "lpc/commutant.hpp"
#include "lpc/flow.hpp"
#include "lpc/sln_cycles.hpp"

#include <json.hpp>

#include <string>

namespace lpc {

using Json = nlohmann::json;  // std::map storage, so keys are always sorted

// Algebras: {"name", "labels", "structure": [{"i","j","k","c"}], "cartan_indices"}
// with 0-based indices and coefficients as "p/q" strings (integers allowed).
Json to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const Json& j);
/// "sl<n>" for the built-in algebras, otherwise a path to a JSON file.
LieAlgebra load_algebra(const std::string& spec);

// Subalgebras: {"vectors": [[c, ...], ...], "abelian", "torus"}.
Json to_json(const SubalgebraSpec& sub);
SubalgebraSpec subalgebra_from_json(const Json& j, const LieAlgebra& alg);
/// "cartan", "whole", "zero", "h:<c1,c2,...>" (one vector in Cartan
/// coordinates), "span:<v1;v2;...>" (full coordinate vectors) or a JSON path.
SubalgebraSpec load_subalgebra(const std::string& spec, const LieAlgebra& alg);

/// "h:<c1,...>" in Cartan coordinates or a full coordinate list "c1,c2,...".
Point parse_point(const std::string& spec, const LieAlgebra& alg);

// Polynomials: list of {"coeff": "p/q", "exps": {"<var>": e}} in decreasing
// graded-lex order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, std::size_t nvars);

// Generator sets: {"nvars", "generators": [{"label","degree","indecomposable","poly","text"}], "kernel_dims"}.
Json to_json(const GeneratorSet& gs, const std::vector<std::string>& var_labels = {});
GeneratorSet generator_set_from_json(const Json& j);
/// Accepts a generator set or a report with one under "generators",
/// "casimirs" or "base".
GeneratorSet load_generator_set(const std::string& path);

Json to_json(const ValidationReport& rep);
Json to_json(const RelationSet& rs);
Json to_json(const ClosureReport& rep, const GeneratorSet& gens, const std::vector<std::string>& var_labels);
Json to_json(const CasimirSet& cs, const std::vector<std::string>& var_labels);
Json to_json(const CasimirCountReport& rep);
Json to_json(const MFAlgebra& mf, const std::vector<std::string>& var_labels);
Json to_json(const CommutativityReport& rep);
Json to_json(const MFRankReport& rep);
Json to_json(const InclusionReport& rep);
Json to_json(const SandwichReport& rep);
Json to_json(const ChainReport& rep, const std::vector<std::string>& var_labels);
Json to_json(const ExistenceReport& rep, const std::vector<std::string>& var_labels);
Json to_json(const JMapReport& rep, const std::vector<std::string>& var_labels);
Json to_json(const LeafDimension& ld);
Json to_json(const RelationFamiliesReport& rep);
Json to_json(const OracleReport& rep);
Json to_json(const FlowResult& res, const std::vector<std::string>& monitor_labels);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);
/// Writes dump(j) to path; throws Error with the path on failure.
void write_json(const Json& j, const std::string& path);
Json read_json(const std::string& path);

}  // namespace lpc

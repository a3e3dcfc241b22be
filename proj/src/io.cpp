#include "lpc/io.hpp"

#include "lpc/error.hpp"
#include "lpc/poly_io.hpp"

#include <fstream>
#include <sstream>

namespace lpc {

namespace {

std::string rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw ParseError("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(std::string("expected a nonnegative integer for ") + what + ", got " + j.dump());
    return j.get<std::size_t>();
}

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json polys_text(const std::vector<Polynomial>& ps, const std::vector<std::string>& labels) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(render(p, labels));
    return out;
}

Json degree_map(const std::map<unsigned, std::size_t>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

Json center_json(const CenterReport& rep, const GeneratorSet& base, const GeneratorSet& inter,
                 const std::vector<std::string>& labels) {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
        failures.push_back({{"base", base.generators[f.base].label},
                            {"intermediate", inter.generators[f.intermediate].label},
                            {"bracket", render(f.bracket, labels)}});
    return {{"passed", rep.passed()}, {"checked", rep.checked}, {"failures", failures}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Json to_json(const LieAlgebra& alg) {
    Json structure = Json::array();
    for (const auto& e : alg.entries())
        structure.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", rational_json(e.c)}});
    return {{"name", alg.name()},
            {"dim", alg.dim()},
            {"labels", strings(alg.labels())},
            {"structure", structure},
            {"cartan_indices", alg.cartan_indices()}};
}

LieAlgebra algebra_from_json(const Json& j) {
    try {
        std::string name = j.value("name", std::string("custom"));
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            labels = field(j, "labels").get<std::vector<std::string>>();
        } else {
            std::size_t dim = index_from_json(field(j, "dim"), "dim");
            for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i));
        }
        if (j.contains("dim") && index_from_json(j.at("dim"), "dim") != labels.size())
            throw ParseError("'dim' does not match the number of labels");
        std::vector<StructureConstant> entries;
        for (const auto& e : field(j, "structure")) {
            entries.push_back({index_from_json(field(e, "i"), "i"), index_from_json(field(e, "j"), "j"),
                               index_from_json(field(e, "k"), "k"), rational_from_json(field(e, "c"))});
        }
        std::vector<std::size_t> cartan;
        if (j.contains("cartan_indices"))
            for (const auto& c : j.at("cartan_indices")) cartan.push_back(index_from_json(c, "cartan index"));
        return LieAlgebra(std::move(name), std::move(labels), std::move(entries), std::move(cartan));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed algebra JSON: ") + e.what());
    }
}

LieAlgebra load_algebra(const std::string& spec) {
    if (spec.size() > 2 && spec.rfind("sl", 0) == 0 &&
        spec.find_first_not_of("0123456789", 2) == std::string::npos) {
        return builtin_sl(std::stoi(spec.substr(2)));
    }
    return algebra_from_json(read_json(spec));
}

Json to_json(const SubalgebraSpec& sub) {
    Json vectors = Json::array();
    for (const auto& v : sub.vectors) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(rational_json(c));
        vectors.push_back(row);
    }
    return {{"vectors", vectors}, {"abelian", sub.abelian}, {"torus", sub.torus}, {"full", sub.full}};
}

SubalgebraSpec subalgebra_from_json(const Json& j, const LieAlgebra& alg) {
    try {
        std::vector<Vector> vectors;
        for (const auto& row : field(j, "vectors")) {
            Vector v;
            for (const auto& c : row) v.push_back(rational_from_json(c));
            if (v.size() != alg.dim()) throw DimensionMismatch(alg.dim(), v.size());
            vectors.push_back(std::move(v));
        }
        SubalgebraSpec sub = SubalgebraSpec::span(std::move(vectors), j.value("abelian", false), j.value("torus", false));
        sub.full = j.value("full", false);
        check_subalgebra(alg, sub);
        return sub;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed subalgebra JSON: ") + e.what());
    }
}

Point parse_point(const std::string& spec, const LieAlgebra& alg) {
    if (spec.rfind("h:", 0) == 0) {
        Vector coords = parse_rational_list(spec.substr(2));
        const auto& cartan = alg.cartan_indices();
        if (cartan.empty()) throw ConfigurationError("'h:' coordinates need a flagged Cartan subalgebra");
        if (coords.size() != cartan.size()) throw DimensionMismatch(cartan.size(), coords.size());
        Point p(alg.dim());
        for (std::size_t i = 0; i < cartan.size(); ++i) p[cartan[i]] = coords[i];
        return p;
    }
    Point p = parse_rational_list(spec);
    if (p.size() != alg.dim()) throw DimensionMismatch(alg.dim(), p.size());
    return p;
}

SubalgebraSpec load_subalgebra(const std::string& spec, const LieAlgebra& alg) {
    if (spec == "cartan") return SubalgebraSpec::cartan(alg);
    if (spec == "whole" || spec == "g") return SubalgebraSpec::whole(alg);
    if (spec == "zero" || spec == "0") return SubalgebraSpec::zero();
    SubalgebraSpec sub;
    if (spec.rfind("h:", 0) == 0) {
        sub = SubalgebraSpec::span({parse_point(spec, alg)}, true, true);
    } else if (spec.rfind("span:", 0) == 0) {
        std::vector<Vector> vectors;
        std::stringstream ss(spec.substr(5));
        std::string part;
        while (std::getline(ss, part, ';')) vectors.push_back(parse_point(part, alg));
        sub = SubalgebraSpec::span(std::move(vectors));
    } else {
        return subalgebra_from_json(read_json(spec), alg);
    }
    check_subalgebra(alg, sub);
    return sub;
}

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json exps = Json::object();
        for (const auto& [v, e] : it->first.factors()) exps[std::to_string(v)] = e;
        terms.push_back({{"coeff", rational_json(it->second)}, {"exps", exps}});
    }
    return terms;
}

Polynomial polynomial_from_json(const Json& j, std::size_t nvars) {
    if (j.is_string()) return parse_polynomial(j.get<std::string>(), nvars);
    if (!j.is_array()) throw ParseError("polynomial must be a term list or a string");
    Polynomial p(nvars);
    try {
        for (const auto& t : j) {
            std::vector<Monomial::Factor> f;
            for (const auto& [var, e] : field(t, "exps").items()) {
                std::size_t v = std::stoul(var);
                if (v >= nvars) throw ParseError("variable index " + var + " out of range");
                f.emplace_back(static_cast<std::uint32_t>(v), e.get<std::uint32_t>());
            }
            p.add_term(Monomial(std::move(f)), rational_from_json(field(t, "coeff")));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("variable keys must be integers");
    }
    return p;
}

Json to_json(const GeneratorSet& gs, const std::vector<std::string>& var_labels) {
    Json gens = Json::array();
    for (const auto& g : gs.generators)
        gens.push_back({{"label", g.label},
                        {"degree", g.degree},
                        {"indecomposable", g.indecomposable},
                        {"poly", to_json(g.poly)},
                        {"text", render(g.poly, var_labels)}});
    Json out = {{"nvars", gs.nvars}, {"generators", gens}, {"kernel_dims", degree_map(gs.kernel_dims)}};
    out["indecomposable_counts"] = degree_map(gs.indecomposable_counts());
    return out;
}

GeneratorSet generator_set_from_json(const Json& j) {
    try {
        std::size_t nvars = index_from_json(field(j, "nvars"), "nvars");
        std::vector<Polynomial> polys;
        std::vector<std::string> labels;
        std::vector<bool> indec;
        for (const auto& g : field(j, "generators")) {
            polys.push_back(polynomial_from_json(field(g, "poly"), nvars));
            labels.push_back(g.value("label", "g" + std::to_string(polys.size())));
            indec.push_back(g.value("indecomposable", true));
        }
        GeneratorSet gs = GeneratorSet::from_polys(nvars, polys, labels);
        for (std::size_t i = 0; i < indec.size(); ++i) gs.generators[i].indecomposable = indec[i];
        if (j.contains("kernel_dims"))
            for (const auto& [k, v] : j.at("kernel_dims").items())
                gs.kernel_dims[static_cast<unsigned>(std::stoul(k))] = v.get<std::size_t>();
        return gs;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed generator set JSON: ") + e.what());
    }
}

GeneratorSet load_generator_set(const std::string& path) {
    Json j = read_json(path);
    if (j.is_object() && !j.contains("nvars")) {
        // Reports of the commutant, casimirs and chain commands embed a set.
        for (const char* key : {"generators", "casimirs", "base"})
            if (j.contains(key) && j[key].is_object() && j[key].contains("nvars"))
                return generator_set_from_json(j[key]);
    }
    return generator_set_from_json(j);
}

Json to_json(const ValidationReport& rep) {
    auto check = [](const ValidationCheck& c) {
        return Json{{"passed", c.passed}, {"detail", c.detail}, {"witness", c.witness}};
    };
    return {{"antisymmetry", check(rep.antisymmetry)},
            {"jacobi", check(rep.jacobi)},
            {"killing_nondegenerate", check(rep.killing_nondegenerate)},
            {"semisimple", rep.semisimple()}};
}

Json to_json(const RelationSet& rs) {
    Json rels = Json::array();
    for (std::size_t i = 0; i < rs.relations.size(); ++i)
        rels.push_back({{"degree", rs.degrees[i]},
                        {"text", render(rs.relations[i], rs.generator_labels)},
                        {"poly", to_json(rs.relations[i])}});
    return {{"generator_labels", strings(rs.generator_labels)}, {"max_degree", rs.max_degree}, {"relations", rels}};
}

Json to_json(const ClosureReport& rep, const GeneratorSet& gens, const std::vector<std::string>& var_labels) {
    Json entries = Json::array();
    auto glabels = gens.labels();
    for (const auto& e : rep.entries) {
        if (e.zero) continue;
        Json j = {{"u", glabels[e.u]}, {"v", glabels[e.v]}, {"bracket", render(e.bracket, var_labels)},
                  {"expressible", e.expressible}};
        if (e.expression) j["expression"] = render(*e.expression, glabels);
        entries.push_back(j);
    }
    return {{"closed", rep.closed}, {"zero_brackets", rep.zero_brackets}, {"pairs", rep.entries.size()},
            {"nonzero_brackets", entries}};
}

Json to_json(const CasimirSet& cs, const std::vector<std::string>& var_labels) {
    Json gens = Json::array();
    auto labels = cs.labels();
    for (std::size_t i = 0; i < cs.size(); ++i)
        gens.push_back({{"label", labels[i]},
                        {"degree", cs.degrees[i]},
                        {"text", render(cs.generators[i], var_labels)},
                        {"poly", to_json(cs.generators[i])}});
    return {{"method", to_string(cs.method)}, {"nvars", cs.nvars}, {"generators", gens}};
}

Json to_json(const CasimirCountReport& rep) {
    return {{"found", rep.found}, {"expected", rep.expected}, {"matches", rep.matches}};
}

Json to_json(const MFAlgebra& mf, const std::vector<std::string>& var_labels) {
    Json shift = Json::array();
    for (const auto& c : mf.shift) shift.push_back(rational_json(c));
    Json gens = Json::array();
    auto labels = mf.labels();
    auto base_labels = mf.base.labels();
    for (std::size_t i = 0; i < mf.generators.size(); ++i)
        gens.push_back({{"label", labels[i]},
                        {"casimir", base_labels[mf.origins[i].casimir]},
                        {"order", mf.origins[i].order},
                        {"text", render(mf.generators[i], var_labels)},
                        {"poly", to_json(mf.generators[i])}});
    return {{"shift", shift}, {"regular", mf.regular}, {"generators", gens}, {"casimirs", to_json(mf.base, var_labels)}};
}

Json to_json(const CommutativityReport& rep) {
    Json nz = Json::array();
    for (const auto& b : rep.nonzero) nz.push_back({{"u", b.u}, {"v", b.v}, {"bracket", to_json(b.bracket)}});
    return {{"pairs_checked", rep.pairs_checked}, {"zero_brackets", rep.pairs_checked - rep.nonzero.size()},
            {"nonzero", nz}, {"passed", rep.passed()}};
}

Json to_json(const MFRankReport& rep) {
    return {{"rank", rep.rank},
            {"expected", rep.expected},
            {"regular", rep.regular},
            {"passed", rep.passed},
            {"relations_found", rep.relations_found},
            {"relation_degree", rep.relation_degree},
            {"note", rep.note}};
}

Json to_json(const InclusionReport& rep) {
    Json j = {{"centralizer", rep.centralizer},
              {"generators_invariant", rep.generators_invariant},
              {"agreement", rep.agreement}};
    j["witness"] = rep.witness ? Json{{"generator", rep.witness->first}, {"subalgebra_vector", rep.witness->second}}
                               : Json(nullptr);
    return j;
}

Json to_json(const SandwichReport& rep) {
    return {{"d_A", rep.d_a},
            {"rank", rep.rank},
            {"hypothesis_met", rep.hypothesis_met},
            {"casimirs_included", rep.casimirs_included},
            {"inclusion", to_json(rep.inclusion)},
            {"holds", rep.holds},
            {"certificate", rep.certificate}};
}

Json to_json(const ChainReport& rep, const std::vector<std::string>& var_labels) {
    return {{"algebra", rep.algebra},
            {"dim", rep.dim},
            {"rank", rep.rank},
            {"d_A", rep.d_a},
            {"max_degree", rep.max_degree},
            {"base_kind", rep.base_kind},
            {"intermediate", to_json(rep.intermediate, var_labels)},
            {"base", to_json(rep.base, var_labels)},
            {"centrality", center_json(rep.centrality, rep.base, rep.intermediate, var_labels)},
            {"trdeg_intermediate", rep.trdeg_intermediate},
            {"trdeg_base", rep.trdeg_base},
            {"dim_identity", rep.dim_identity},
            {"base_matches_orbit", rep.base_matches_orbit},
            {"intermediate_complete", rep.intermediate_complete},
            {"verdict", to_string(rep.verdict)},
            {"notes", strings(rep.notes)}};
}

Json to_json(const ExistenceReport& rep, const std::vector<std::string>& var_labels) {
    return {{"d_A", rep.d_a},
            {"center_trdeg", rep.center_trdeg},
            {"trdeg_intermediate", rep.trdeg_intermediate},
            {"max_degree", rep.max_degree},
            {"center_elements", polys_text(rep.center_elements, var_labels)},
            {"verdict", to_string(rep.verdict)},
            {"note", rep.note}};
}

Json to_json(const JMapReport& rep, const std::vector<std::string>& var_labels) {
    GeneratorSet comps = GeneratorSet::from_polys(rep.intermediate.nvars, rep.components, rep.component_labels);
    return {{"components", to_json(comps, var_labels)},
            {"intermediate", to_json(rep.intermediate, var_labels)},
            {"brackets", center_json(rep.brackets, comps, rep.intermediate, var_labels)},
            {"passed", rep.passed()}};
}

Json to_json(const LeafDimension& ld) { return {{"value", ld.value}, {"valid", ld.valid}, {"note", ld.note}}; }

Json to_json(const RelationFamiliesReport& rep) {
    Json results = Json::array();
    for (const auto& r : rep.results)
        results.push_back({{"family", r.family},
                           {"convention", r.convention},
                           {"applicable", r.applicable},
                           {"instances", r.instances},
                           {"failures", r.failures},
                           {"first_failure", r.first_failure},
                           {"holds", r.holds()}});
    return {{"n", rep.n},
            {"results", results},
            {"chosen_conventions", rep.chosen},
            {"ideal_checked", rep.ideal_checked},
            {"ideal_missing", rep.ideal_missing},
            {"ideal_degree", rep.ideal_degree},
            {"passed", rep.passed}};
}

Json to_json(const OracleReport& rep) {
    Json degrees = Json::array();
    for (const auto& d : rep.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"monomials", d.monomials},
                           {"balanced", d.balanced},
                           {"kernel_dim", d.kernel_dim},
                           {"mismatches", d.mismatches},
                           {"same_span", d.same_span}});
    return {{"n", rep.n}, {"degrees", degrees}, {"passed", rep.passed()}};
}

Json to_json(const FlowResult& res, const std::vector<std::string>& monitor_labels) {
    Json drift = Json::object();
    for (std::size_t i = 0; i < res.monitor_drift.size(); ++i)
        drift[i < monitor_labels.size() ? monitor_labels[i] : "m" + std::to_string(i)] = res.monitor_drift[i];
    return {{"steps", res.steps},
            {"monitor_drift", drift},
            {"max_monitor_drift", res.max_monitor_drift()},
            {"casimir_drift", res.casimir_drift},
            {"max_casimir_drift", res.max_casimir_drift()},
            {"energy_drift", res.energy_drift},
            {"final_state", res.final_state}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << dump(j);
    if (!out) throw Error("write failed for '" + path + "'");
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace lpc

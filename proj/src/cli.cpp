#include "lpc/cli.hpp"

#include "lpc/casimir_mf.hpp"
#include "lpc/chain.hpp"
#include "lpc/commutant.hpp"
#include "lpc/flow.hpp"
#include "lpc/io.hpp"
#include "lpc/poly_io.hpp"
#include "lpc/sln_cycles.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lpc {

namespace {

void add_common(CLI::App* app, RunConfig& cfg) {
    app->add_option("--out", cfg.out, "JSON report path ('-' for standard output)");
    app->add_option("--seed", cfg.seed, "seed for generic-point sampling");
    app->add_option("--samples", cfg.samples, "number of generic sample points")->check(CLI::PositiveNumber);
    app->add_option("--max-columns", cfg.max_columns, "monomial column budget per kernel")->check(CLI::PositiveNumber);
    app->add_option("--max-products", cfg.max_products, "generator product budget per degree")
        ->check(CLI::PositiveNumber);
}

void add_algebra(CLI::App* app, RunConfig& cfg) {
    app->add_option("--algebra", cfg.algebra, "built-in 'sl<n>' or a JSON file");
}

void add_degree(CLI::App* app, RunConfig& cfg) {
    app->add_option("--max-degree", cfg.max_degree, "degree cap")->check(CLI::PositiveNumber);
}

unsigned threads_from_env() {
    const char* env = std::getenv("LPC_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError(std::string("LPC_THREADS must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(v);
}

CommutantOptions options(const RunConfig& cfg) {
    CommutantOptions o;
    o.max_columns = cfg.max_columns;
    o.max_products = cfg.max_products;
    o.sampling.seed = cfg.seed;
    o.sampling.samples = cfg.samples;
    return o;
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out.empty()) return;
    if (cfg.out == "-")
        out << dump(j);
    else
        write_json(j, cfg.out);
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ParseError("not a number: '" + item + "'");
        }
        if (used != item.size()) throw ParseError("not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int cmd_algebra_check(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    LieAlgebra alg = load_algebra(cfg.algebra);
    ValidationReport rep = validate_algebra(alg);
    Json j = {{"algebra", to_json(alg)}, {"validation", to_json(rep)}};
    emit(j, cfg, json_out);
    out << alg.name() << ": dim " << alg.dim() << ", antisymmetry " << (rep.antisymmetry.passed ? "ok" : "FAILED")
        << ", jacobi " << (rep.jacobi.passed ? "ok" : "FAILED") << ", killing "
        << (rep.killing_nondegenerate.passed ? "nondegenerate" : "degenerate") << "\n";
    return rep.antisymmetry.passed && rep.jacobi.passed ? 0 : 1;
}

int cmd_commutant(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    LieAlgebra alg = load_algebra(cfg.algebra);
    SubalgebraSpec sub = load_subalgebra(cfg.subalgebra.empty() ? "cartan" : cfg.subalgebra, alg);
    CommutantOptions opts = options(cfg);
    unsigned cap = cfg.max_degree ? cfg.max_degree : default_degree_cap(alg, opts.sampling);
    GeneratorSet gs = generate(alg, sub, cap, opts);
    std::size_t td = trdeg(gs, opts.sampling);
    Json j = {{"algebra", alg.name()},
              {"subalgebra", to_json(sub)},
              {"max_degree", cap},
              {"generators", to_json(gs, alg.labels())},
              {"trdeg", td},
              {"d_A", orbit_dimension(alg, sub, opts.sampling)}};
    if (cfg.relation_degree > 0) j["relations"] = to_json(relation_basis(gs, cfg.relation_degree, opts));
    if (cfg.closure) {
        unsigned closure_degree = 0;
        for (const auto& g : gs.generators) closure_degree = std::max(closure_degree, 2 * g.degree - 1);
        j["closure"] = to_json(bracket_closure_check(alg, gs, closure_degree, opts), gs, alg.labels());
    }
    emit(j, cfg, json_out);
    out << alg.name() << ": " << gs.size() << " generators up to degree " << cap << ", trdeg " << td << "\n";
    for (const auto& g : gs.generators) out << "  " << g.label << " = " << render(g.poly, alg.labels()) << "\n";
    if (j.contains("relations")) out << "  relations: " << j["relations"]["relations"].size() << "\n";
    return 0;
}

int cmd_casimirs(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    LieAlgebra alg = load_algebra(cfg.algebra);
    CommutantOptions opts = options(cfg);
    unsigned cap = cfg.max_degree ? cfg.max_degree : default_degree_cap(alg, opts.sampling);
    CasimirSet cs;
    if (cfg.method == "kernel") {
        cs = casimirs_by_kernel(alg, cap, opts);
    } else if (cfg.method == "trace") {
        int n = static_cast<int>(alg.cartan_indices().size()) + 1;
        if (alg.name() != "sl" + std::to_string(n)) throw UsageError("--method trace needs a built-in sl(n)");
        cs = trace_casimirs_sln(n, std::min<unsigned>(cap, static_cast<unsigned>(n)));
    } else {
        throw UsageError("--method must be 'kernel' or 'trace'");
    }
    bool central = true;
    Json certs = Json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto bad = noncentral_witnesses(alg, cs.generators[i]);
        central = central && bad.empty();
        certs.push_back({{"label", cs.labels()[i]}, {"coordinates_checked", alg.dim()}, {"noncentral", bad}});
    }
    CasimirCountReport count = casimir_count_check(alg, cap, opts);
    Json j = {{"algebra", alg.name()},
              {"max_degree", cap},
              {"casimirs", to_json(cs, alg.labels())},
              {"centrality", certs},
              {"count", to_json(count)}};
    emit(j, cfg, json_out);
    out << alg.name() << ": " << cs.size() << " Casimirs (" << to_string(cs.method) << "), "
        << (central ? "all central" : "NOT central") << ", independent " << count.found << " of expected "
        << count.expected << "\n";
    for (std::size_t i = 0; i < cs.size(); ++i)
        out << "  " << cs.labels()[i] << " = " << render(cs.generators[i], alg.labels()) << "\n";
    return central && count.matches ? 0 : 1;
}

int cmd_mf(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    LieAlgebra alg = load_algebra(cfg.algebra);
    if (cfg.shift.empty()) throw UsageError("mf needs --shift");
    CommutantOptions opts = options(cfg);
    unsigned cap = cfg.max_degree ? cfg.max_degree : default_degree_cap(alg, opts.sampling);
    Point mu = parse_point(cfg.shift, alg);
    CasimirSet cs = casimirs_by_kernel(alg, cap, opts);
    MFAlgebra mf = mf_generators(alg, cs, mu);
    CommutativityReport comm = mf_commutativity_check(alg, mf);
    MFRankReport rank = mf_rank_check(alg, mf, cfg.relation_degree ? cfg.relation_degree : 4, opts);
    Json j = {{"algebra", alg.name()},
              {"mf", to_json(mf, alg.labels())},
              {"commutativity", to_json(comm)},
              {"rank", to_json(rank)}};
    bool ok = comm.passed() && (!mf.regular || rank.passed);
    if (!cfg.subalgebra.empty()) {
        SubalgebraSpec sub = load_subalgebra(cfg.subalgebra, alg);
        SandwichReport sw = sandwich_check(alg, cs, mf, sub, opts.sampling);
        j["inclusion"] = to_json(sw.inclusion);
        j["sandwich"] = to_json(sw);
        ok = ok && sw.inclusion.agreement;
    }
    emit(j, cfg, json_out);
    out << alg.name() << ": " << mf.generators.size() << " shift generators, " << comm.pairs_checked - comm.nonzero.size()
        << "/" << comm.pairs_checked << " brackets zero, rank " << rank.rank << " (b = " << rank.expected << "), "
        << (mf.regular ? "regular" : "non-regular") << " shift\n";
    if (j.contains("inclusion"))
        out << "  inclusion: centralizer " << j["inclusion"]["centralizer"] << ", generators invariant "
            << j["inclusion"]["generators_invariant"] << ", agreement " << j["inclusion"]["agreement"] << "\n";
    return ok ? 0 : 1;
}

int cmd_chain_verify(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    ChainSpec spec;
    spec.algebra = std::make_shared<LieAlgebra>(load_algebra(cfg.algebra));
    const LieAlgebra& alg = *spec.algebra;
    spec.subalgebra = load_subalgebra(cfg.subalgebra.empty() ? "cartan" : cfg.subalgebra, alg);
    spec.max_degree = cfg.max_degree;
    spec.options = options(cfg);
    if (cfg.base == "casimirs") {
        spec.base.kind = BaseKind::Casimirs;
    } else if (cfg.base == "moment-map") {
        spec.base.kind = BaseKind::MomentMap;
    } else if (cfg.base.rfind("mf:", 0) == 0) {
        spec.base.kind = BaseKind::ShiftAlgebra;
        spec.base.shift = parse_point(cfg.base.substr(3), alg);
    } else if (cfg.base.rfind("file:", 0) == 0) {
        spec.base.kind = BaseKind::Explicit;
        spec.base.explicit_generators = load_generator_set(cfg.base.substr(5));
    } else {
        throw UsageError("--base must be casimirs, moment-map, mf:<shift> or file:<path>");
    }
    ChainReport rep = verify_chain(spec);
    emit(to_json(rep, alg.labels()), cfg, json_out);
    out << alg.name() << ": trdeg intermediate " << rep.trdeg_intermediate << ", trdeg base " << rep.trdeg_base
        << ", d_A " << rep.d_a << ", centrality " << (rep.centrality.passed() ? "pass" : "FAIL") << " -> "
        << to_string(rep.verdict) << "\n";
    for (const auto& n : rep.notes) out << "  note: " << n << "\n";
    return exit_code(rep.verdict);
}

int cmd_cycles(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    if (cfg.n < 2) throw UsageError("--n must be at least 2");
    if (cfg.check != "relations" && cfg.check != "oracle" && cfg.check != "all")
        throw UsageError("--check must be relations, oracle or all");
    CommutantOptions opts = options(cfg);
    GeneratorSet gens = enumerate_cycle_generators(cfg.n);
    LieAlgebra alg = builtin_sl(cfg.n);
    Json j = {{"n", cfg.n}, {"generators", to_json(gens, alg.labels())}};
    bool ok = true;
    out << "sl(" << cfg.n << "): " << gens.size() << " cycle generators\n";
    if (cfg.check != "oracle") {
        RelationFamiliesReport rep = relation_families_check(cfg.n);
        j["relations"] = to_json(rep);
        ok = ok && rep.passed;
        for (const auto& [family, conv] : rep.chosen) out << "  family " << family << ": holds (" << conv << ")" << "\n";
    }
    if (cfg.check != "relations") {
        unsigned k = cfg.max_degree ? cfg.max_degree : 4;
        OracleReport rep = oracle_cross_check(cfg.n, k, opts);
        j["oracle"] = to_json(rep);
        ok = ok && rep.passed();
        out << "  oracle up to degree " << k << ": " << (rep.passed() ? "agrees" : "MISMATCH") << "\n";
    }
    emit(j, cfg, json_out);
    return ok ? 0 : 1;
}

int cmd_flow(const RunConfig& cfg, std::ostream& json_out, std::ostream& out) {
    LieAlgebra alg = load_algebra(cfg.algebra);
    if (cfg.hamiltonian.empty()) throw UsageError("flow needs --hamiltonian");
    if (cfg.x0.empty()) throw UsageError("flow needs --x0");
    CommutantOptions opts = options(cfg);
    unsigned cap = cfg.max_degree ? cfg.max_degree : default_degree_cap(alg, opts.sampling);
    FlowProblem p;
    p.hamiltonian = parse_polynomial(cfg.hamiltonian, alg.dim(), alg.labels());
    p.x0 = parse_doubles(cfg.x0);
    p.t_end = cfg.t_end;
    p.dt = cfg.dt;
    p.record_stride = cfg.csv.empty() ? 0 : 1;
    GeneratorSet monitors;
    if (cfg.monitor == "auto:torus")
        monitors = generate(alg, SubalgebraSpec::cartan(alg), cap, opts);
    else if (cfg.monitor == "auto:casimirs")
        monitors = casimirs_by_kernel(alg, cap, opts).as_generator_set();
    else
        monitors = load_generator_set(cfg.monitor);
    if (monitors.nvars != alg.dim()) throw DimensionMismatch(alg.dim(), monitors.nvars);
    p.monitors = monitors.polys();
    p.monitor_labels = monitors.labels();
    p.casimirs = casimirs_by_kernel(alg, cap, opts).generators;

    FlowResult res = integrate(alg, p);
    if (!cfg.csv.empty()) {
        std::ofstream csv(cfg.csv);
        if (!csv) throw Error("cannot write '" + cfg.csv + "'");
        write_trajectory_csv(csv, res, alg.labels(), p.monitor_labels);
    }
    Json j = {{"algebra", alg.name()},
              {"hamiltonian", render(p.hamiltonian, alg.labels())},
              {"t_end", p.t_end},
              {"dt", p.dt},
              {"result", to_json(res, p.monitor_labels)},
              {"tolerance", cfg.tolerance}};
    bool ok = res.max_monitor_drift() <= cfg.tolerance && res.max_casimir_drift() <= cfg.tolerance;
    j["within_tolerance"] = ok;
    emit(j, cfg, json_out);
    out << alg.name() << ": " << res.steps << " RK4 steps, max monitor drift " << res.max_monitor_drift()
        << ", Casimir drift " << res.max_casimir_drift() << ", energy drift " << res.energy_drift << "\n";
    return ok ? 0 : 1;
}

}  // namespace

RunConfig parse_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"Exact invariant theory and superintegrability checks for Lie-Poisson structures", "lpc"};
    app.require_subcommand(1);

    auto* algebra = app.add_subcommand("algebra", "algebra utilities");
    algebra->require_subcommand(1);
    auto* check = algebra->add_subcommand("check", "validate structure constants");
    add_algebra(check, cfg);
    add_common(check, cfg);

    auto* commutant = app.add_subcommand("commutant", "generators of the invariants of a subalgebra");
    add_algebra(commutant, cfg);
    commutant->add_option("--subalgebra", cfg.subalgebra, "cartan | whole | zero | h:<coords> | span:<v;...> | file");
    add_degree(commutant, cfg);
    commutant->add_option("--relations", cfg.relation_degree, "weighted degree for relation search")
        ->check(CLI::PositiveNumber);
    commutant->add_flag("--closure", cfg.closure, "express generator brackets in the generators");
    add_common(commutant, cfg);

    auto* casimirs = app.add_subcommand("casimirs", "Casimir generators");
    add_algebra(casimirs, cfg);
    add_degree(casimirs, cfg);
    casimirs->add_option("--method", cfg.method, "kernel | trace");
    add_common(casimirs, cfg);

    auto* mf = app.add_subcommand("mf", "argument-shift algebra");
    add_algebra(mf, cfg);
    add_degree(mf, cfg);
    mf->add_option("--shift", cfg.shift, "h:<cartan coords> or full coordinates")->required();
    mf->add_option("--subalgebra", cfg.subalgebra, "subalgebra for the inclusion check");
    mf->add_option("--relations", cfg.relation_degree, "weighted degree for relation search")->check(CLI::PositiveNumber);
    add_common(mf, cfg);

    auto* chain = app.add_subcommand("chain", "superintegrable chains");
    chain->require_subcommand(1);
    auto* verify = chain->add_subcommand("verify", "decide superintegrability of a chain");
    add_algebra(verify, cfg);
    verify->add_option("--subalgebra", cfg.subalgebra, "cartan | whole | zero | h:<coords> | span:<v;...> | file");
    verify->add_option("--base", cfg.base, "casimirs | moment-map | mf:<shift> | file:<gens.json>");
    add_degree(verify, cfg);
    add_common(verify, cfg);

    auto* cycles = app.add_subcommand("cycles", "cycle generators of the torus invariants of sl(n)");
    cycles->add_option("--n", cfg.n, "matrix size")->check(CLI::Range(2, 12));
    add_degree(cycles, cfg);
    cycles->add_option("--check", cfg.check, "relations | oracle | all");
    add_common(cycles, cfg);

    auto* flow = app.add_subcommand("flow", "integrate a Hamiltonian flow");
    add_algebra(flow, cfg);
    flow->add_option("--hamiltonian", cfg.hamiltonian, "polynomial, e.g. 'h1^2 + 4*e12*e21'")->required();
    flow->add_option("--x0", cfg.x0, "comma-separated initial point")->required();
    flow->add_option("--t", cfg.t_end, "time horizon")->check(CLI::PositiveNumber);
    flow->add_option("--dt", cfg.dt, "step size")->check(CLI::PositiveNumber);
    flow->add_option("--monitor", cfg.monitor, "auto:torus | auto:casimirs | <gens.json>");
    flow->add_option("--tolerance", cfg.tolerance, "drift tolerance for the exit code")->check(CLI::NonNegativeNumber);
    flow->add_option("--csv", cfg.csv, "trajectory CSV path");
    add_degree(flow, cfg);
    add_common(flow, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) throw HelpRequested(app.help());
        throw UsageError(e.what());
    }

    if (check->parsed()) cfg.command = "algebra check";
    else if (commutant->parsed()) cfg.command = "commutant";
    else if (casimirs->parsed()) cfg.command = "casimirs";
    else if (mf->parsed()) cfg.command = "mf";
    else if (verify->parsed()) cfg.command = "chain verify";
    else if (cycles->parsed()) cfg.command = "cycles";
    else if (flow->parsed()) cfg.command = "flow";
    cfg.threads = threads_from_env();
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    // With "--out -" standard output carries only the JSON report.
    std::ostream& summary = cfg.out == "-" ? err : out;
    try {
        if (cfg.command == "algebra check") return cmd_algebra_check(cfg, out, summary);
        if (cfg.command == "commutant") return cmd_commutant(cfg, out, summary);
        if (cfg.command == "casimirs") return cmd_casimirs(cfg, out, summary);
        if (cfg.command == "mf") return cmd_mf(cfg, out, summary);
        if (cfg.command == "chain verify") return cmd_chain_verify(cfg, out, summary);
        if (cfg.command == "cycles") return cmd_cycles(cfg, out, summary);
        if (cfg.command == "flow") return cmd_flow(cfg, out, summary);
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitInputError;
    } catch (const ResourceError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const IllFormedChain& e) {
        err << "ill-formed chain: " << e.what() << "\n";
        return kExitInputError;
    } catch (const FlowError& e) {
        err << "flow failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_cli(argc, argv);
    } catch (const HelpRequested& h) {
        out << h.what();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInputError;
    }
    return run(cfg, out, err);
}

}  // namespace lpc

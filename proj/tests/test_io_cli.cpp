#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lpc/cli.hpp"
#include "lpc/error.hpp"
#include "lpc/io.hpp"
#include "lpc/poly_io.hpp"

#include "oracles.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lpc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "lpc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("lpc_io_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("algebra JSON round trip") {
    for (const auto& alg : {builtin_sl(2), builtin_sl(3), direct_sum(builtin_sl(2), abelian_algebra(1))}) {
        Json j = to_json(alg);
        LieAlgebra back = algebra_from_json(j);
        CHECK(back.name() == alg.name());
        CHECK(back.labels() == alg.labels());
        CHECK(back.cartan_indices() == alg.cartan_indices());
        REQUIRE(back.entries().size() == alg.entries().size());
        for (std::size_t i = 0; i < alg.entries().size(); ++i) {
            CHECK(back.entries()[i].i == alg.entries()[i].i);
            CHECK(back.entries()[i].k == alg.entries()[i].k);
            CHECK(back.entries()[i].c == alg.entries()[i].c);
        }
        CHECK(dump(to_json(back)) == dump(j));
    }
    CHECK(load_algebra("sl4").dim() == 15);
    CHECK_THROWS_AS(load_algebra("/nonexistent/alg.json"), Error);
    Json bad = to_json(builtin_sl(2));
    bad["structure"][0]["c"] = "1/0";
    CHECK_THROWS_AS(algebra_from_json(bad), ParseError);
}

TEST_CASE("subalgebra and point specifications") {
    LieAlgebra sl3 = builtin_sl(3);
    CHECK(load_subalgebra("cartan", sl3).dim() == 2);
    CHECK(load_subalgebra("whole", sl3).dim() == 8);
    CHECK(load_subalgebra("zero", sl3).dim() == 0);
    auto h = load_subalgebra("h:1,2", sl3);
    REQUIRE(h.dim() == 1);
    CHECK(h.vectors[0][0] == 1);
    CHECK(h.vectors[0][1] == 2);
    CHECK(h.abelian);
    auto sp = load_subalgebra("span:0,0,1,0,0,0,0,0", sl3);
    CHECK(sp.vectors[0][2] == 1);
    CHECK_THROWS(load_subalgebra("h:1,2,3", sl3));
    Json j = to_json(h);
    auto back = subalgebra_from_json(j, sl3);
    CHECK(back.vectors == h.vectors);
    CHECK(back.torus == h.torus);

    auto p = parse_point("h:1,3", sl3);
    CHECK(p.size() == 8);
    CHECK(p[1] == 3);
    CHECK(parse_point("1,2,3,4,5,6,7,1/2", sl3)[7] == Rational(1, 2));
    CHECK_THROWS(parse_point("1,2", sl3));
}

TEST_CASE("polynomial and generator set JSON round trip") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 30; ++t) {
        auto p = oracle::random_polynomial(rng, 5, 4, 6);
        CHECK(polynomial_from_json(to_json(p), 5) == p);
    }
    CHECK(polynomial_from_json(Json("2*x0*x1 - x2"), 3) == parse_polynomial("2*x0*x1 - x2", 3));

    LieAlgebra sl3 = builtin_sl(3);
    auto gens = generate(sl3, SubalgebraSpec::cartan(sl3), 3);
    auto dir = scratch_dir();
    write_json(to_json(gens, sl3.labels()), (dir / "gens.json").string());
    auto back = load_generator_set((dir / "gens.json").string());
    CHECK(back.polys() == gens.polys());
    CHECK(back.labels() == gens.labels());
    CHECK(back.kernel_dims == gens.kernel_dims);
    CHECK(dump(read_json((dir / "gens.json").string())) == slurp(dir / "gens.json"));
}

TEST_CASE("canonical dump") {
    Json j = {{"b", 1}, {"a", {1, 2}}};
    std::string s = dump(j);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"a\"") < s.find("\"b\""));
}

TEST_CASE("command line: success paths") {
    auto check = cli({"algebra", "check", "--algebra", "sl3"});
    CHECK(check.code == 0);

    auto comm = cli({"commutant", "--algebra", "sl3", "--subalgebra", "cartan", "--relations", "6", "--out", "-"});
    REQUIRE(comm.code == 0);
    Json j = Json::parse(comm.out);
    CHECK(j.dump().find("q3_2") != std::string::npos);

    CHECK(cli({"casimirs", "--algebra", "sl3", "--method", "trace"}).code == 0);
    CHECK(cli({"casimirs", "--algebra", "sl2"}).code == 0);
    CHECK(cli({"mf", "--algebra", "sl3", "--shift", "h:1,3", "--subalgebra", "cartan"}).code == 0);
    CHECK(cli({"chain", "verify", "--algebra", "sl2", "--subalgebra", "cartan"}).code == 0);
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "h:1,2", "--base", "moment-map"}).code == 0);
    CHECK(cli({"cycles", "--n", "3"}).code == 0);

    auto dir = scratch_dir();
    auto csv = (dir / "traj.csv").string();
    auto flow = cli({"flow", "--algebra", "sl2", "--hamiltonian", "h1^2 + 4*e12*e21", "--x0", "0.5,1,0.25", "--t",
                     "1", "--dt", "0.001", "--monitor", "auto:casimirs", "--csv", csv});
    CHECK(flow.code == 0);
    CHECK(fs::exists(csv));

    // Reports feed back in as generator sets.
    auto cas = (dir / "cas.json").string(), comm_path = (dir / "comm.json").string();
    CHECK(cli({"casimirs", "--algebra", "sl3", "--out", cas}).code == 0);
    CHECK(cli({"commutant", "--algebra", "sl3", "--out", comm_path}).code == 0);
    CHECK(load_generator_set(cas).size() == 2);
    CHECK(load_generator_set(comm_path).size() == 7);
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "cartan", "--base", "file:" + cas}).code == 0);
    CHECK(cli({"flow", "--algebra", "sl3", "--hamiltonian", "h1", "--x0", "1,1,1,1,1,1,1,1", "--t", "1", "--monitor",
               comm_path})
              .code == 0);
}

TEST_CASE("command line: verdicts and failures map to exit codes") {
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "cartan", "--base", "mf:h:1,3"}).code == 1);
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "cartan", "--max-degree", "2"}).code == 2);
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "whole", "--base", "moment-map"}).code == 3);
    CHECK(cli({"commutant", "--algebra", "sl3", "--max-degree", "3", "--max-columns", "5"}).code == 2);

    auto dir = scratch_dir();
    auto gens_path = (dir / "bad_base.json").string();
    write_json(to_json(GeneratorSet::from_polys(3, {Polynomial::variable(3, 1)}, {"e"})), gens_path);
    CHECK(cli({"chain", "verify", "--algebra", "sl2", "--subalgebra", "cartan", "--base", "file:" + gens_path}).code ==
          3);

    LieAlgebra bad("bad", {"a", "b", "c"}, {{0, 1, 2, 1}, {0, 2, 0, 1}, {1, 2, 2, 1}});
    auto alg_path = (dir / "bad_alg.json").string();
    write_json(to_json(bad), alg_path);
    CHECK(cli({"algebra", "check", "--algebra", alg_path}).code == 1);

    CHECK(cli({"flow", "--algebra", "sl2", "--hamiltonian", "h1^2", "--x0", "10,1,1", "--t", "400", "--dt", "1"})
              .code == 1);
}

TEST_CASE("command line: usage errors") {
    CHECK(cli({}).code == 3);
    CHECK(cli({"frobnicate"}).code == 3);
    CHECK(cli({"commutant", "--max-degree", "0"}).code == 3);
    CHECK(cli({"commutant", "--algebra", "/nonexistent.json"}).code == 3);
    CHECK(cli({"mf", "--algebra", "sl3"}).code == 3);
    CHECK(cli({"mf", "--algebra", "sl3", "--shift", "h:1"}).code == 3);
    CHECK(cli({"flow", "--algebra", "sl2", "--hamiltonian", "h1 +", "--x0", "1,1,1"}).code == 3);
    auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("chain") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and thread settings") {
    auto dir = scratch_dir();
    auto a = (dir / "a.json").string(), b = (dir / "b.json").string();
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "cartan", "--out", a}).code == 0);
    ::setenv("LPC_THREADS", "4", 1);
    CHECK(cli({"chain", "verify", "--algebra", "sl3", "--subalgebra", "cartan", "--out", b}).code == 0);
    ::unsetenv("LPC_THREADS");
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
    fs::remove_all(dir);
}

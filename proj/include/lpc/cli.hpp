#pragma once

#include "lpc/error.hpp"
#include "lpc/sampling.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lpc {

/// Bad command line; maps to exit code 3.
class UsageError : public Error {
public:
    using Error::Error;
};

/// --help was given; carries the help text.
class HelpRequested : public Error {
public:
    using Error::Error;
};

inline constexpr int kExitInputError = 3;

struct RunConfig {
    std::string command;  // "algebra check", "commutant", "casimirs", "mf", "chain verify", "cycles", "flow"

    std::string algebra = "sl2";
    std::string subalgebra;  // empty: command default
    std::string base = "casimirs";
    std::string shift;
    unsigned max_degree = 0;  // 0: derived from the algebra
    unsigned relation_degree = 0;
    bool closure = false;
    std::string method = "kernel";

    int n = 3;
    std::string check = "all";

    std::string hamiltonian;
    std::string x0;
    double t_end = 1.0;
    double dt = 1e-3;
    std::string monitor = "auto:torus";
    double tolerance = 1e-6;
    std::string csv;

    std::string out;  // JSON report path, "-" for standard output
    std::uint64_t seed = kDefaultSeed;
    int samples = 3;
    unsigned threads = 1;  // from LPC_THREADS
    std::size_t max_columns = 250000;
    std::size_t max_products = 200000;
};

/// Throws UsageError or HelpRequested.
RunConfig parse_cli(int argc, const char* const* argv);

/// Runs a parsed configuration; returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_cli + run with error-to-exit-code mapping.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpc

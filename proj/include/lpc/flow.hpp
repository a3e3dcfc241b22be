#pragma once

#include "lpc/algebra.hpp"
#include "lpc/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lpc {

/// Component k is {H, x_k}; the flow is dx_k/dt = {H, x_k}.
std::vector<Polynomial> hamiltonian_vector_field(const LieAlgebra& alg, const Polynomial& h);

/// Double-precision evaluator for a fixed polynomial.
class CompiledPolynomial {
public:
    CompiledPolynomial() = default;
    explicit CompiledPolynomial(const Polynomial& p);
    double operator()(const std::vector<double>& x) const;

private:
    struct Term {
        double coeff;
        std::vector<Monomial::Factor> factors;
    };
    std::vector<Term> terms_;
};

struct FlowProblem {
    Polynomial hamiltonian;
    std::vector<double> x0;
    double t_end = 1.0;
    double dt = 1e-3;
    std::vector<Polynomial> monitors;
    std::vector<std::string> monitor_labels;
    std::vector<Polynomial> casimirs;
    /// Keep every stride-th state in the trajectory (0 keeps only the endpoints).
    std::size_t record_stride = 1;
};

struct FlowResult {
    std::vector<double> times;
    std::vector<std::vector<double>> states;
    std::vector<std::vector<double>> monitor_values;  // per recorded state
    std::vector<double> monitor_drift;   // max_t |g(x(t)) - g(x(0))|
    std::vector<double> casimir_drift;
    double energy_drift = 0.0;
    std::size_t steps = 0;
    std::vector<double> final_state;

    double max_monitor_drift() const;
    double max_casimir_drift() const;
};

/// Classical fixed-step RK4. Throws InvalidParameter for bad step/horizon,
/// DimensionMismatch for a wrong initial point and FlowError when the state
/// stops being finite.
FlowResult integrate(const LieAlgebra& alg, const FlowProblem& problem);

/// Columns: t, one per coordinate, one per monitor.
void write_trajectory_csv(std::ostream& out, const FlowResult& result, const std::vector<std::string>& coordinate_labels,
                          const std::vector<std::string>& monitor_labels);

}  // namespace lpc

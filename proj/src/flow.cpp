#include "lpc/flow.hpp"

#include "lpc/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace lpc {

std::vector<Polynomial> hamiltonian_vector_field(const LieAlgebra& alg, const Polynomial& h) {
    if (h.nvars() != alg.dim()) throw DimensionMismatch(alg.dim(), h.nvars());
    std::vector<Polynomial> field;
    for (std::size_t k = 0; k < alg.dim(); ++k)
        field.push_back(lie_poisson_bracket(h, Polynomial::variable(alg.dim(), k), alg));
    return field;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) terms_.push_back({c.get_d(), m.factors()});
}

double CompiledPolynomial::operator()(const std::vector<double>& x) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (const auto& [var, e] : t.factors)
            for (std::uint32_t i = 0; i < e; ++i) v *= x[var];
        sum += v;
    }
    return sum;
}

double FlowResult::max_monitor_drift() const {
    return monitor_drift.empty() ? 0.0 : *std::max_element(monitor_drift.begin(), monitor_drift.end());
}

double FlowResult::max_casimir_drift() const {
    return casimir_drift.empty() ? 0.0 : *std::max_element(casimir_drift.begin(), casimir_drift.end());
}

namespace {

std::vector<double> evaluate_all(const std::vector<CompiledPolynomial>& ps, const std::vector<double>& x) {
    std::vector<double> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(p(x));
    return out;
}

void update_drift(std::vector<double>& drift, const std::vector<double>& now, const std::vector<double>& start) {
    for (std::size_t i = 0; i < drift.size(); ++i) drift[i] = std::max(drift[i], std::abs(now[i] - start[i]));
}

}  // namespace

FlowResult integrate(const LieAlgebra& alg, const FlowProblem& problem) {
    const std::size_t n = alg.dim();
    if (!(problem.dt > 0) || !std::isfinite(problem.dt)) throw InvalidParameter("step must be positive");
    if (!(problem.t_end > 0) || !std::isfinite(problem.t_end)) throw InvalidParameter("time horizon must be positive");
    if (problem.x0.size() != n) throw DimensionMismatch(n, problem.x0.size());

    std::vector<CompiledPolynomial> field;
    for (const auto& f : hamiltonian_vector_field(alg, problem.hamiltonian)) field.emplace_back(f);
    auto compile = [&](const std::vector<Polynomial>& ps) {
        std::vector<CompiledPolynomial> out;
        for (const auto& p : ps) {
            if (p.nvars() != n) throw DimensionMismatch(n, p.nvars());
            out.emplace_back(p);
        }
        return out;
    };
    auto monitors = compile(problem.monitors);
    auto casimirs = compile(problem.casimirs);
    CompiledPolynomial energy(problem.hamiltonian);

    const auto steps = static_cast<std::size_t>(std::llround(problem.t_end / problem.dt));
    FlowResult res;
    res.steps = steps;
    std::vector<double> x = problem.x0;
    const auto m0 = evaluate_all(monitors, x);
    const auto c0 = evaluate_all(casimirs, x);
    const double e0 = energy(x);
    res.monitor_drift.assign(monitors.size(), 0.0);
    res.casimir_drift.assign(casimirs.size(), 0.0);

    auto record = [&](std::size_t step, const std::vector<double>& mon) {
        res.times.push_back(static_cast<double>(step) * problem.dt);
        res.states.push_back(x);
        res.monitor_values.push_back(mon);
    };
    record(0, m0);

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    auto rhs = [&](const std::vector<double>& y, std::vector<double>& out) {
        for (std::size_t k = 0; k < n; ++k) out[k] = field[k](y);
    };
    const double h = problem.dt;
    for (std::size_t step = 1; step <= steps; ++step) {
        rhs(x, k1);
        for (std::size_t k = 0; k < n; ++k) tmp[k] = x[k] + 0.5 * h * k1[k];
        rhs(tmp, k2);
        for (std::size_t k = 0; k < n; ++k) tmp[k] = x[k] + 0.5 * h * k2[k];
        rhs(tmp, k3);
        for (std::size_t k = 0; k < n; ++k) tmp[k] = x[k] + h * k3[k];
        rhs(tmp, k4);
        for (std::size_t k = 0; k < n; ++k) x[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
        if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); }))
            throw FlowError("non-finite state", static_cast<double>(step) * h);

        auto mon = evaluate_all(monitors, x);
        update_drift(res.monitor_drift, mon, m0);
        update_drift(res.casimir_drift, evaluate_all(casimirs, x), c0);
        res.energy_drift = std::max(res.energy_drift, std::abs(energy(x) - e0));
        bool keep = step == steps || (problem.record_stride > 0 && step % problem.record_stride == 0);
        if (keep) record(step, mon);
    }
    res.final_state = x;
    return res;
}

void write_trajectory_csv(std::ostream& out, const FlowResult& result, const std::vector<std::string>& coordinate_labels,
                          const std::vector<std::string>& monitor_labels) {
    out << "t";
    for (const auto& l : coordinate_labels) out << "," << l;
    for (const auto& l : monitor_labels) out << "," << l;
    out << "\n";
    auto old = out.precision(17);
    for (std::size_t r = 0; r < result.times.size(); ++r) {
        out << result.times[r];
        for (double v : result.states[r]) out << "," << v;
        for (double v : result.monitor_values[r]) out << "," << v;
        out << "\n";
    }
    out.precision(old);
}

}  // namespace lpc

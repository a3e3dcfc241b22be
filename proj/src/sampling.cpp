#include "lpc/sampling.hpp"

#include <algorithm>

namespace lpc {

std::vector<Point> sample_points(std::size_t n, const SamplingOptions& opts) {
    std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    const auto width = static_cast<std::uint64_t>(2 * opts.bound + 1);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(opts.samples));
    for (int s = 0; s < opts.samples; ++s) {
        Point p(n);
        for (auto& x : p) x = static_cast<long>(rng() % width) - opts.bound;
        pts.push_back(std::move(p));
    }
    return pts;
}

std::size_t generic_rank(std::size_t n, const std::function<Matrix(const Point&)>& f,
                         const SamplingOptions& opts) {
    std::size_t best = 0;
    for (const auto& p : sample_points(n, opts)) best = std::max(best, rank(f(p)));
    return best;
}

std::size_t jacobian_rank(std::span<const Polynomial> gens, std::size_t nvars,
                          const SamplingOptions& opts) {
    if (gens.empty()) return 0;
    // Differentiate once, evaluate per point.
    std::vector<std::vector<Polynomial>> partials(gens.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t i = 0; i < nvars; ++i) partials[r].push_back(partial_derivative(gens[r], i));
    return generic_rank(
        nvars,
        [&](const Point& pt) {
            Matrix m(gens.size(), nvars);
            for (std::size_t r = 0; r < gens.size(); ++r)
                for (std::size_t i = 0; i < nvars; ++i)
                    if (!partials[r][i].is_zero()) m(r, i) = evaluate(partials[r][i], pt);
            return m;
        },
        opts);
}

}  // namespace lpc

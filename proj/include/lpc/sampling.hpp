#pragma once

#include "lpc/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace lpc {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Generic-point sampling for rank computations.
///
/// Ranks of polynomial matrices are evaluated at a few pseudo-random integer
/// points and the maximum is taken. The result is the generic rank with
/// probability one and always a certified lower bound for it.
struct SamplingOptions {
    std::uint64_t seed = kDefaultSeed;
    int samples = 3;
    int bound = 10;  // coordinates in [-bound, bound]
};

/// Deterministic for a given (n, options); independent of libstdc++'s
/// distribution implementations.
std::vector<Point> sample_points(std::size_t n, const SamplingOptions& opts = {});

/// max over sampled points of rank(f(point)).
std::size_t generic_rank(std::size_t n, const std::function<Matrix(const Point&)>& f,
                         const SamplingOptions& opts = {});

/// Generic Jacobian rank of a list of polynomials (transcendence degree of
/// the algebra they generate).
std::size_t jacobian_rank(std::span<const Polynomial> gens, std::size_t nvars,
                          const SamplingOptions& opts = {});

}  // namespace lpc

#pragma once

#include "lpc/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lpc {

/// Canonical text form: terms in decreasing graded-lex order, written as
/// "c*v^a*w" joined by " + " / " - ". Variables use `labels` when given and
/// "x<k>" (0-based) otherwise.
std::string render(const Polynomial& p, const std::vector<std::string>& labels = {});

/// Parses sums/products/powers of rationals and variables with parentheses.
/// Variables are resolved against `labels` first, then as "x<k>" or "x_<k>"
/// with a 0-based index.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars,
                            const std::vector<std::string>& labels = {});

}  // namespace lpc

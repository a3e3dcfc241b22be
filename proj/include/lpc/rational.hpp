#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lpc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense vector of exact rationals.
using Vector = std::vector<Rational>;

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Parses "p", "-p" or "p/q" (no decimals, no whitespace inside).
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" or "p" rendering.
std::string format_rational(const Rational& value);

Vector parse_rational_list(std::string_view text, char sep = ',');

}  // namespace lpc

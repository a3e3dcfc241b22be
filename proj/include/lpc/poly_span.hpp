#pragma once

#include "lpc/polynomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lpc {

/// Incremental echelon basis of a space of polynomials, keyed by leading
/// monomial (graded-lex largest term).
///
/// Every stored row may carry a tag: a polynomial in auxiliary variables
/// recording which inputs were combined to produce it. Reductions update tags
/// alongside, so a zero remainder exposes a linear dependency among inputs.
class PolySpan {
public:
    struct Reduced {
        Polynomial remainder;
        Polynomial tag;
    };

    PolySpan(std::size_t nvars, std::size_t tag_vars = 0) : nvars_(nvars), tag_vars_(tag_vars) {}

    /// Fully reduces p. The returned tag equals `tag - sum c_r tag_r` when
    /// the remainder equals `p - sum c_r row_r`.
    Reduced reduce(Polynomial p, Polynomial tag) const;
    Polynomial reduce(const Polynomial& p) const;

    /// Inserts p; returns the reduced form. A zero remainder means p was
    /// already in the span (and the tag of the result is a dependency).
    Reduced insert(Polynomial p, Polynomial tag);
    bool insert(const Polynomial& p);

    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }
    std::size_t dim() const noexcept { return rows_.size(); }
    bool is_pivot(const Monomial& m) const { return rows_.count(m) != 0; }

    /// Unique reduced basis: monic, each leading monomial absent from every
    /// other element; ordered by decreasing leading monomial.
    std::vector<Polynomial> basis() const;

private:
    struct Row {
        Polynomial poly;
        Polynomial tag;
    };
    std::size_t nvars_;
    std::size_t tag_vars_;
    std::map<Monomial, Row, GrlexLess> rows_;
};

/// Whether span(a) == span(b).
bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t nvars);

}  // namespace lpc

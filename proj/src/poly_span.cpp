#include "lpc/poly_span.hpp"

#include "lpc/error.hpp"

namespace lpc {

PolySpan::Reduced PolySpan::reduce(Polynomial p, Polynomial tag) const {
    if (p.nvars() != nvars_) throw DimensionMismatch(nvars_, p.nvars());
    if (tag.nvars() != tag_vars_) tag = extend_ring(tag, tag_vars_);
    Polynomial rem(nvars_);
    while (!p.is_zero()) {
        const auto& [m, c] = p.leading();
        auto it = rows_.find(m);
        if (it == rows_.end()) {
            rem.add_term(m, c);
            p.add_term(Monomial(m), -Rational(c));
            continue;
        }
        Rational f = c / it->second.poly.leading().second;
        p.add_scaled(it->second.poly, -f);
        if (tag_vars_ > 0) tag.add_scaled(it->second.tag, -f);
    }
    return {std::move(rem), std::move(tag)};
}

Polynomial PolySpan::reduce(const Polynomial& p) const { return reduce(p, Polynomial(tag_vars_)).remainder; }

PolySpan::Reduced PolySpan::insert(Polynomial p, Polynomial tag) {
    Reduced r = reduce(std::move(p), std::move(tag));
    if (!r.remainder.is_zero()) {
        Monomial lead = r.remainder.leading().first;
        rows_.emplace(std::move(lead), Row{r.remainder, r.tag});
    }
    return r;
}

bool PolySpan::insert(const Polynomial& p) {
    return !insert(p, Polynomial(tag_vars_)).remainder.is_zero();
}

std::vector<Polynomial> PolySpan::basis() const {
    // Rows are already reduced w.r.t. pivots inserted before them; finish by
    // reducing each tail against all other rows, smallest leads first.
    std::map<Monomial, Polynomial, GrlexLess> done;
    for (const auto& [lead, row] : rows_) {
        Polynomial p = row.poly;
        Polynomial out(nvars_);
        while (!p.is_zero()) {
            const auto& [m, c] = p.leading();
            auto it = done.find(m);
            if (it != done.end()) {
                p.add_scaled(it->second, -Rational(c));
            } else {
                out.add_term(m, c);
                p.add_term(Monomial(m), -Rational(c));
            }
        }
        done.emplace(lead, out.monic());
    }
    std::vector<Polynomial> out;
    for (auto it = done.rbegin(); it != done.rend(); ++it) out.push_back(it->second);
    return out;
}

bool same_span(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, std::size_t nvars) {
    PolySpan sa(nvars), sb(nvars);
    for (const auto& p : a) sa.insert(p);
    for (const auto& p : b) sb.insert(p);
    if (sa.dim() != sb.dim()) return false;
    for (const auto& p : b)
        if (!sa.contains(p)) return false;
    return true;
}

}  // namespace lpc

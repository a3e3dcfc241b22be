#include "lpc/algebra.hpp"

#include "lpc/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace lpc {

namespace {

void add_sparse(SparseVector& v, std::size_t k, const Rational& c) {
    auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& e, std::size_t x) { return e.first < x; });
    if (it != v.end() && it->first == k) {
        it->second += c;
        if (it->second == 0) v.erase(it);
    } else if (c != 0) {
        v.insert(it, {k, c});
    }
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels,
                       std::vector<StructureConstant> entries, std::vector<std::size_t> cartan_indices)
    : name_(std::move(name)), labels_(std::move(labels)), cartan_(std::move(cartan_indices)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidParameter("Lie algebra must have positive dimension");
    std::set<std::string> seen_labels(labels_.begin(), labels_.end());
    if (seen_labels.size() != n) throw InvalidParameter("duplicate basis labels");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (auto& e : entries) {
        if (e.i >= n || e.j >= n || e.k >= n)
            throw InvalidParameter("structure constant index out of range");
        if (e.i >= e.j)
            throw InvalidParameter("structure constants must have i < j (got i=" + std::to_string(e.i) +
                                   ", j=" + std::to_string(e.j) + ")");
        if (!seen.insert({e.i, e.j, e.k}).second)
            throw InvalidParameter("duplicate structure constant (" + std::to_string(e.i) + "," +
                                   std::to_string(e.j) + "," + std::to_string(e.k) + ")");
        if (e.c != 0) entries_.push_back(std::move(e));
    }
    std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (auto c : cartan_)
        if (c >= n) throw InvalidParameter("cartan index out of range");
    table_.assign(n * n, {});
    for (const auto& e : entries_) {
        add_sparse(table_[e.i * n + e.j], e.k, e.c);
        add_sparse(table_[e.j * n + e.i], e.k, -e.c);
    }
}

std::optional<std::size_t> LieAlgebra::label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

Rational LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& [idx, c] : bracket(i, j))
        if (idx == k) return c;
    return 0;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n) throw DimensionMismatch(n, x.size());
    if (y.size() != n) throw DimensionMismatch(n, y.size());
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j] == 0 || i == j) continue;
            Rational f = x[i] * y[j];
            for (const auto& [k, c] : bracket(i, j)) out[k] += f * c;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate_algebra(const LieAlgebra& alg) {
    ValidationReport rep;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n && rep.antisymmetry.passed; ++i) {
        if (!alg.bracket(i, i).empty()) {
            rep.antisymmetry = {false, "[X_i, X_i] != 0", {i, i}};
            break;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVector neg = alg.bracket(j, i);
            for (auto& [k, c] : neg) c = -c;
            if (neg != alg.bracket(i, j)) {
                rep.antisymmetry = {false, "C_ji != -C_ij", {i, j}};
                break;
            }
        }
    }
    if (rep.antisymmetry.passed) rep.antisymmetry.detail = "ok";

    // [[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] = 0
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c, Vector& acc) {
        for (const auto& [m, cm] : alg.bracket(a, b))
            for (const auto& [l, cl] : alg.bracket(m, c)) acc[l] += cm * cl;
    };
    bool jacobi_ok = true;
    for (std::size_t i = 0; i < n && jacobi_ok; ++i)
        for (std::size_t j = i + 1; j < n && jacobi_ok; ++j)
            for (std::size_t k = j + 1; k < n && jacobi_ok; ++k) {
                Vector acc(n);
                nested(i, j, k, acc);
                nested(j, k, i, acc);
                nested(k, i, j, acc);
                for (std::size_t l = 0; l < n; ++l)
                    if (acc[l] != 0) {
                        jacobi_ok = false;
                        rep.jacobi = {false,
                                      "Jacobi identity fails for (" + alg.labels()[i] + "," + alg.labels()[j] +
                                          "," + alg.labels()[k] + ") in component " + alg.labels()[l],
                                      {i, j, k, l}};
                        break;
                    }
            }
    if (jacobi_ok) rep.jacobi.detail = "ok";

    BilinearForm kf = killing_form(alg);
    Rational det = determinant(kf.matrix);
    if (det == 0)
        rep.killing_nondegenerate = {false, "Killing form is degenerate: not semisimple", {}};
    else
        rep.killing_nondegenerate.detail = "det = " + format_rational(det);
    return rep;
}

// ---------------------------------------------------------------------------

std::size_t SlnLayout::offdiag(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw InvalidParameter("invalid sl(n) index pair");
    const int base = n - 1;
    return static_cast<std::size_t>(base + (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0));
}

std::optional<std::pair<int, int>> SlnLayout::edge(std::size_t var) const {
    const auto base = static_cast<std::size_t>(n - 1);
    if (var < base) return std::nullopt;
    const std::size_t r = var - base;
    int i = static_cast<int>(r / static_cast<std::size_t>(n - 1)) + 1;
    int j = static_cast<int>(r % static_cast<std::size_t>(n - 1)) + 1;
    if (j >= i) ++j;
    return std::make_pair(i, j);
}

std::vector<Matrix> sln_matrix_basis(int n) {
    if (n < 2) throw InvalidParameter("sl(n) requires n >= 2");
    SlnLayout lay{n};
    std::vector<Matrix> basis(lay.dim(), Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
    for (int i = 1; i < n; ++i) {
        auto& m = basis[lay.cartan(i)];
        m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = 1;
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = -1;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) basis[lay.offdiag(i, j)](static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return basis;
}

namespace {

// Coordinates of a traceless matrix in the builtin sl(n) basis.
Vector sln_coordinates(const Matrix& m, int n) {
    SlnLayout lay{n};
    Vector out(lay.dim());
    Rational partial = 0;
    for (int i = 1; i < n; ++i) {
        partial += m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1));
        out[lay.cartan(i)] = partial;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out[lay.offdiag(i, j)] = m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    return out;
}

std::string sln_label(int i, int j, int n) {
    if (n < 10) return "e" + std::to_string(i) + std::to_string(j);
    return "e" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

LieAlgebra builtin_sl(int n) {
    if (n < 2) throw InvalidParameter("sl(n) requires n >= 2, got " + std::to_string(n));
    SlnLayout lay{n};
    const auto basis = sln_matrix_basis(n);
    std::vector<std::string> labels(lay.dim());
    for (int i = 1; i < n; ++i) labels[lay.cartan(i)] = "h" + std::to_string(i);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) labels[lay.offdiag(i, j)] = sln_label(i, j, n);
    std::vector<StructureConstant> entries;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            Matrix comm = basis[a] * basis[b] - basis[b] * basis[a];
            Vector coords = sln_coordinates(comm, n);
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (coords[k] != 0) entries.push_back({a, b, k, coords[k]});
        }
    std::vector<std::size_t> cartan;
    for (int i = 1; i < n; ++i) cartan.push_back(lay.cartan(i));
    return LieAlgebra("sl" + std::to_string(n), std::move(labels), std::move(entries), std::move(cartan));
}

LieAlgebra abelian_algebra(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
    return LieAlgebra("abelian" + std::to_string(n), std::move(labels), {});
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "_1");
    for (const auto& l : b.labels()) labels.push_back(l + "_2");
    std::vector<StructureConstant> entries = a.entries();
    const std::size_t off = a.dim();
    for (const auto& e : b.entries()) entries.push_back({e.i + off, e.j + off, e.k + off, e.c});
    std::vector<std::size_t> cartan;
    if (!a.cartan_indices().empty() && !b.cartan_indices().empty()) {
        cartan = a.cartan_indices();
        for (auto c : b.cartan_indices()) cartan.push_back(c + off);
    }
    return LieAlgebra(a.name() + "+" + b.name(), std::move(labels), std::move(entries), std::move(cartan));
}

// ---------------------------------------------------------------------------

Matrix ad_matrix(const LieAlgebra& alg, const Vector& h) {
    const std::size_t n = alg.dim();
    if (h.size() != n) throw DimensionMismatch(n, h.size());
    Matrix ad(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (h[j] == 0) continue;
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [i, c] : alg.bracket(j, k)) ad(i, k) += h[j] * c;
    }
    return ad;
}

BilinearForm killing_form(const LieAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        ads.push_back(ad_matrix(alg, e));
    }
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational t = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (ads[i](r, s) != 0 && ads[j](s, r) != 0) t += ads[i](r, s) * ads[j](s, r);
            b(i, j) = t;
            b(j, i) = t;
        }
    return {std::move(b)};
}

BilinearForm trace_form_sln(int n) {
    const auto basis = sln_matrix_basis(n);
    Matrix b(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) b(i, j) = trace(basis[i] * basis[j]);
    return {std::move(b)};
}

bool is_ad_invariant(const LieAlgebra& alg, const BilinearForm& form) {
    const std::size_t n = alg.dim();
    const Matrix& b = form.matrix;
    // B([Z,X],Y) + B(X,[Z,Y]) with X, Y, Z basis vectors
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Rational s = 0;
                for (const auto& [k, c] : alg.bracket(z, x)) s += c * b(k, y);
                for (const auto& [k, c] : alg.bracket(z, y)) s += c * b(x, k);
                if (s != 0) return false;
            }
    return true;
}

Matrix commutator_matrix(const LieAlgebra& alg, std::span<const Rational> x) {
    const std::size_t n = alg.dim();
    if (x.size() != n) throw DimensionMismatch(n, x.size());
    Matrix a(n, n);
    for (const auto& e : alg.entries()) {
        if (x[e.k] == 0) continue;
        Rational v = e.c * x[e.k];
        a(e.i, e.j) += v;
        a(e.j, e.i) -= v;
    }
    return a;
}

// ---------------------------------------------------------------------------

SubalgebraSpec SubalgebraSpec::cartan(const LieAlgebra& alg) {
    if (alg.cartan_indices().empty())
        throw ConfigurationError("algebra '" + alg.name() + "' has no flagged Cartan subalgebra");
    SubalgebraSpec s;
    for (auto c : alg.cartan_indices()) {
        Vector v(alg.dim());
        v[c] = 1;
        s.vectors.push_back(std::move(v));
    }
    s.abelian = true;
    s.torus = true;
    return s;
}

SubalgebraSpec SubalgebraSpec::whole(const LieAlgebra& alg) {
    SubalgebraSpec s;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        Vector v(alg.dim());
        v[i] = 1;
        s.vectors.push_back(std::move(v));
    }
    s.full = true;
    return s;
}

SubalgebraSpec SubalgebraSpec::span(std::vector<Vector> vectors, bool abelian, bool torus) {
    SubalgebraSpec s;
    s.vectors = std::move(vectors);
    s.abelian = abelian || torus;
    s.torus = torus;
    return s;
}

void check_subalgebra(const LieAlgebra& alg, const SubalgebraSpec& sub) {
    const std::size_t n = alg.dim();
    const std::size_t s = sub.dim();
    if (s == 0) return;
    Matrix m(s, n);
    for (std::size_t r = 0; r < s; ++r) {
        if (sub.vectors[r].size() != n) throw DimensionMismatch(n, sub.vectors[r].size());
        for (std::size_t c = 0; c < n; ++c) m(r, c) = sub.vectors[r][c];
    }
    if (rank(m) != s) throw InvalidParameter("subalgebra vectors are linearly dependent");
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b) {
            Vector br = alg.bracket(sub.vectors[a], sub.vectors[b]);
            bool zero = std::all_of(br.begin(), br.end(), [](const Rational& x) { return x == 0; });
            if (sub.abelian && !zero)
                throw InvalidParameter("subalgebra flagged abelian but [H_" + std::to_string(a + 1) + ", H_" +
                                       std::to_string(b + 1) + "] != 0");
            if (zero) continue;
            Matrix ext(s + 1, n);
            for (std::size_t r = 0; r < s; ++r)
                for (std::size_t c = 0; c < n; ++c) ext(r, c) = m(r, c);
            for (std::size_t c = 0; c < n; ++c) ext(s, c) = br[c];
            if (rank(ext) != s)
                throw InvalidParameter("subalgebra not closed: [H_" + std::to_string(a + 1) + ", H_" +
                                       std::to_string(b + 1) + "] leaves the span");
        }
}

std::size_t orbit_dimension(const LieAlgebra& alg, const SubalgebraSpec& sub, const SamplingOptions& opts) {
    const std::size_t n = alg.dim();
    const std::size_t s = sub.dim();
    if (s == 0) return 0;
    std::vector<Matrix> ads;
    for (const auto& h : sub.vectors) ads.push_back(ad_matrix(alg, h));
    return generic_rank(
        n,
        [&](const Point& x) {
            // row j, column k: L_{H_j}(x_k) at x = sum_i ad(H_j)_{ik} x_i
            Matrix m(s, n);
            for (std::size_t j = 0; j < s; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Rational v = 0;
                    for (std::size_t i = 0; i < n; ++i)
                        if (ads[j](i, k) != 0 && x[i] != 0) v += ads[j](i, k) * x[i];
                    m(j, k) = v;
                }
            return m;
        },
        opts);
}

std::size_t algebra_rank(const LieAlgebra& alg, const SamplingOptions& opts) {
    if (!alg.cartan_indices().empty()) return alg.cartan_indices().size();
    const std::size_t n = alg.dim();
    return n - generic_rank(n, [&](const Point& x) { return commutator_matrix(alg, x); }, opts);
}

bool is_regular(const LieAlgebra& alg, std::span<const Rational> mu, std::optional<std::size_t> rank_g) {
    if (!rank_g) {
        if (alg.cartan_indices().empty())
            throw ConfigurationError("rank of '" + alg.name() + "' unknown and no Cartan subalgebra flagged");
        rank_g = alg.cartan_indices().size();
    }
    return rank(commutator_matrix(alg, mu)) == alg.dim() - *rank_g;
}

Vector transport_to_algebra(const BilinearForm& form, std::span<const Rational> mu) {
    auto inv = inverse(form.matrix);
    if (!inv) throw InvalidParameter("bilinear form is singular");
    return *inv * Vector(mu.begin(), mu.end());
}

bool in_centralizer(const LieAlgebra& alg, const SubalgebraSpec& sub, std::span<const Rational> mu,
                    const BilinearForm& form) {
    if (mu.size() != alg.dim()) throw DimensionMismatch(alg.dim(), mu.size());
    if (sub.dim() == 0) return true;
    Vector xi = transport_to_algebra(form, mu);
    for (const auto& h : sub.vectors) {
        Vector br = alg.bracket(h, xi);
        if (!std::all_of(br.begin(), br.end(), [](const Rational& x) { return x == 0; })) return false;
    }
    return true;
}

bool in_centralizer(const LieAlgebra& alg, const SubalgebraSpec& sub, std::span<const Rational> mu) {
    if (sub.dim() == 0) return true;
    return in_centralizer(alg, sub, mu, killing_form(alg));
}

Polynomial dual_transport(const LieAlgebra& alg, const BilinearForm& form, const Polynomial& on_g) {
    const std::size_t n = alg.dim();
    if (on_g.nvars() != n) throw DimensionMismatch(n, on_g.nvars());
    auto inv = inverse(form.matrix);
    if (!inv) throw InvalidParameter("bilinear form is singular");
    std::vector<Polynomial> images(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((*inv)(i, j) != 0)
                images[i].add_term(Monomial::variable(static_cast<std::uint32_t>(j)), (*inv)(i, j));
    return substitute(on_g, images);
}

Polynomial dual_transport_inverse(const LieAlgebra& alg, const BilinearForm& form, const Polynomial& on_dual) {
    const std::size_t n = alg.dim();
    if (on_dual.nvars() != n) throw DimensionMismatch(n, on_dual.nvars());
    std::vector<Polynomial> images(n, Polynomial(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (form.matrix(j, i) != 0)
                images[j].add_term(Monomial::variable(static_cast<std::uint32_t>(i)), form.matrix(j, i));
    return substitute(on_dual, images);
}

Polynomial linear_polynomial(const LieAlgebra& alg, const Vector& h) {
    if (h.size() != alg.dim()) throw DimensionMismatch(alg.dim(), h.size());
    Polynomial p(alg.dim());
    for (std::size_t j = 0; j < h.size(); ++j) p.add_term(Monomial::variable(static_cast<std::uint32_t>(j)), h[j]);
    return p;
}

}  // namespace lpc

#include "lpc/linalg.hpp"

#include "lpc/error.hpp"

#include <algorithm>

namespace lpc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch(a.cols_, b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch(a.rows_, b.rows_);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch(a.rows_, b.rows_);
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch(a.cols_, v.size());
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (a(i, j) != 0 && v[j] != 0) out[i] += a(i, j) * v[j];
    return out;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
        Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(lead_row, j) != 0) m(r, j) -= f * m(lead_row, j);
        }
        if (pivots) pivots->push_back(c);
        ++lead_row;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch(m.rows(), m.cols());
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch(m.rows(), m.cols());
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(std::move(aug), &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational trace(const Matrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

// ---------------------------------------------------------------------------

namespace {

using Row = IntegerEchelon::Row;

void make_primitive(Row& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*other, dropping zeros.
Row combine(const Row& row, const Integer& a, const Row& other, const Integer& b) {
    Row out;
    out.reserve(row.size() + other.size());
    auto i = row.begin();
    auto j = other.begin();
    while (i != row.end() || j != other.end()) {
        if (j == other.end() || (i != row.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == row.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            Integer v = a * i->second - b * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

void IntegerEchelon::reduce(Row& row) const {
    // Only entries at pivot columns are eliminated; the leading entry first.
    std::size_t pos = 0;
    while (pos < row.size()) {
        auto it = pivots_.find(row[pos].first);
        if (it == pivots_.end()) {
            ++pos;
            continue;
        }
        const Row& p = it->second;
        const Integer& lead = p.front().second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), row[pos].second.get_mpz_t());
        Integer a = lead / g;
        Integer b = row[pos].second / g;
        std::size_t col = row[pos].first;
        row = combine(row, a, p, b);
        make_primitive(row);
        // entries before col are untouched by the combination
        pos = static_cast<std::size_t>(
            std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; }) -
            row.begin());
    }
}

bool IntegerEchelon::insert(const SparseVector& row) {
    // clear denominators
    Integer l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Row r;
    r.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (c >= cols_) throw DimensionMismatch(cols_, c + 1);
        if (v == 0) continue;
        Integer x = l / v.get_den();
        x *= v.get_num();
        r.emplace_back(c, std::move(x));
    }
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return insert_integer(std::move(r));
}

bool IntegerEchelon::insert_integer(Row row) {
    make_primitive(row);
    reduce(row);
    if (row.empty()) return false;
    // normalize sign of leading entry
    if (row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
    std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    fully_reduced_ = false;
    return true;
}

void IntegerEchelon::back_substitute() {
    if (fully_reduced_) return;
    // Highest pivot first: every row then only needs rows already reduced.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Row& row = it->second;
        std::size_t pos = 1;
        while (pos < row.size()) {
            auto p = pivots_.find(row[pos].first);
            if (p == pivots_.end()) {
                ++pos;
                continue;
            }
            const Row& prow = p->second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), prow.front().second.get_mpz_t(), row[pos].second.get_mpz_t());
            Integer a = prow.front().second / g;
            Integer b = row[pos].second / g;
            std::size_t col = row[pos].first;
            row = combine(row, a, prow, b);
            make_primitive(row);
            pos = static_cast<std::size_t>(
                std::lower_bound(row.begin(), row.end(), col,
                                 [](const auto& e, std::size_t c) { return e.first < c; }) -
                row.begin());
        }
    }
    fully_reduced_ = true;
}

std::vector<SparseVector> IntegerEchelon::nullspace() {
    back_substitute();
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [c, r] : pivots_) is_pivot[c] = true;
    std::map<std::size_t, SparseVector> vecs;
    for (std::size_t f = 0; f < cols_; ++f)
        if (!is_pivot[f]) vecs[f].emplace_back(f, Rational(1));
    for (const auto& [pc, row] : pivots_) {
        const Integer& lead = row.front().second;
        for (std::size_t k = 1; k < row.size(); ++k) {
            auto& v = vecs.at(row[k].first);
            Rational x(-row[k].second, lead);
            x.canonicalize();
            v.emplace_back(pc, std::move(x));
        }
    }
    std::vector<SparseVector> out;
    out.reserve(vecs.size());
    for (auto& [f, v] : vecs) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVector> sparse_nullspace(const std::vector<SparseVector>& rows, std::size_t cols) {
    IntegerEchelon ech(cols);
    for (const auto& r : rows) ech.insert(r);
    return ech.nullspace();
}

}  // namespace lpc

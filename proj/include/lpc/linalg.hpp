#pragma once

#include "lpc/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace lpc {

/// Dense row-major matrix over exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; pivot columns are appended to `pivots` if given.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column (RREF-normalized).
std::vector<Vector> nullspace(const Matrix& m);
Rational trace(const Matrix& m);

/// Row echelon structure over the integers built by fraction-free elimination.
///
/// Rows are inserted one at a time; each is reduced against existing pivot
/// rows by cross multiplication and then divided by its content, so entries
/// stay integral and small. Columns are eliminated in ascending index order.
class IntegerEchelon {
public:
    using Row = std::vector<std::pair<std::size_t, Integer>>;

    explicit IntegerEchelon(std::size_t cols) : cols_(cols) {}

    /// Returns true if the row was linearly independent of the stored rows.
    bool insert(const SparseVector& row);
    bool insert_integer(Row row);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Basis of the right kernel. Vector f has entry 1 at free column f,
    /// zeros at the other free columns, and is supported on columns <= f.
    std::vector<SparseVector> nullspace();

private:
    void reduce(Row& row) const;
    void back_substitute();

    std::size_t cols_;
    std::map<std::size_t, Row> pivots_;
    bool fully_reduced_ = true;
};

/// Kernel of a sparse matrix given by rows.
std::vector<SparseVector> sparse_nullspace(const std::vector<SparseVector>& rows, std::size_t cols);

}  // namespace lpc

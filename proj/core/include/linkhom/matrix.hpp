#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/error.hpp"
#include "linkhom/poly.hpp"
#include "linkhom/ratfunc.hpp"
#include "linkhom/rational.hpp"

namespace linkhom {

/// Dense row-major matrix over a scalar type T (Rational, RatFunc or Poly).
template <class T>
class Matrix {
   public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeMismatch("matrix", 0, std::to_string(rows_ * cols_) + " entries",
                                std::to_string(data_.size()) + " entries");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw ShapeMismatch("row", i, std::to_string(cols_) + " columns", std::to_string(row.size()));
            for (const auto& v : row) data_.push_back(v);
            ++i;
        }
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    /// Diagonal matrix with the given entries.
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    /// Column vector.
    static Matrix column(const std::vector<T>& v) { return Matrix(v.size(), 1, v); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<T>& data() const noexcept { return data_; }

    std::vector<T> column_vector(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& x = (*this)(i, j);
                if (i == j ? !x.is_one() : !x.is_zero()) return false;
            }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexOutOfRange("matrix block out of range");
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Matrix select_columns(const std::vector<std::size_t>& idx) const {
        Matrix b(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < idx.size(); ++k) b(i, k) = (*this)(i, idx[k]);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw IndexOutOfRange("matrix block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& c) {
        for (auto& x : data_) x *= c;
        return *this;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = -x;
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("product", 0, std::to_string(a.cols_) + " rows", std::to_string(b.rows_));
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (y.is_zero()) continue;
                    c(i, j) += x * y;
                }
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

   private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("sum", 0, shape_string(), o.shape_string());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Matrices over a fiber field: Q at a rational point, Q(t) at the generic point.
template <class K>
using MatrixF = Matrix<K>;
using MatrixQ = Matrix<Rational>;
using MatrixRF = Matrix<RatFunc>;
/// Matrices over the base ring Q[t].
using MatrixP = Matrix<Poly>;

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack", 0, std::to_string(a.rows()) + " rows", std::to_string(b.rows()));
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack", 0, std::to_string(a.cols()) + " cols", std::to_string(b.cols()));
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

/// Columns as a matrix with the given row count (needed when the list is empty).
template <class T>
Matrix<T> from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix<T> m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw ShapeMismatch("columns", j, std::to_string(rows) + " entries", std::to_string(cols[j].size()));
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

inline MatrixRF to_ratfunc(const MatrixP& m) {
    return m.map([](const Poly& p) { return RatFunc(p); });
}
inline MatrixRF to_ratfunc(const MatrixQ& m) {
    return m.map([](const Rational& q) { return RatFunc(q); });
}
inline MatrixP to_poly(const MatrixQ& m) {
    return m.map([](const Rational& q) { return Poly(q); });
}

/// Entry-wise evaluation of a polynomial matrix at t = a.
inline MatrixQ eval_at(const MatrixP& m, const Rational& a) {
    return m.map([&](const Poly& p) { return p.eval(a); });
}
/// Entry-wise evaluation of a rational-function matrix; throws PoleAtPoint.
inline MatrixQ eval_at(const MatrixRF& m, const Rational& a) {
    return m.map([&](const RatFunc& f) { return f.eval_at(a); });
}
inline bool is_regular_at(const MatrixRF& m, const Rational& a) {
    for (const auto& f : m.data())
        if (!f.is_regular_at(a)) return false;
    return true;
}

}  // namespace linkhom

#pragma once

// Exact linear algebra over a field: Q (Rational) or Q(t) (RatFunc).

#include <concepts>
#include <cstddef>
#include <limits>
#include <vector>

#include "linkhom/matrix.hpp"

namespace linkhom {

template <class K>
concept FieldScalar = std::same_as<K, Rational> || std::same_as<K, RatFunc>;

inline std::size_t pivot_weight(const Rational& q) { return q.bit_size(); }
inline std::size_t pivot_weight(const RatFunc& f) { return f.weight(); }

template <FieldScalar K>
struct RrefResult {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

// Picks the lightest nonzero entry of column `col` among rows [from, rows).
// The reduced form is unique, so this only affects the cost of getting there.
template <FieldScalar K>
std::size_t choose_pivot_row(const Matrix<K>& m, std::size_t from, std::size_t col) {
    std::size_t best = m.rows();
    std::size_t best_w = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = from; i < m.rows(); ++i) {
        const K& x = m(i, col);
        if (x.is_zero()) continue;
        std::size_t w = pivot_weight(x);
        if (w < best_w) {
            best = i;
            best_w = w;
        }
    }
    return best;
}

template <class T>
void swap_rows(Matrix<T>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Forward elimination to row echelon form. When `reduce` is set, pivots are
// scaled to 1 and entries above them cleared as well.
template <FieldScalar K>
std::vector<std::size_t> eliminate(Matrix<K>& m, bool reduce) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = choose_pivot_row(m, row, col);
        if (p == m.rows()) continue;
        swap_rows(m, row, p);
        if (reduce) {
            K inv = m(row, col).inverse();
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(row, j) *= inv;
        }
        const K pivot = m(row, col);
        for (std::size_t i = reduce ? 0 : row + 1; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            K factor = reduce ? m(i, col) : m(i, col) / pivot;
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (m(row, j).is_zero()) continue;
                m(i, j) -= factor * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Reduced row echelon form and pivot columns.
template <FieldScalar K>
RrefResult<K> rref(Matrix<K> m) {
    auto piv = detail::eliminate(m, true);
    return {std::move(m), std::move(piv)};
}

template <FieldScalar K>
std::size_t rank(Matrix<K> m) {
    return detail::eliminate(m, false).size();
}

/// Right null space basis via the free-variable construction on the RREF:
/// one vector per free column f, with entry 1 at f and minus the RREF
/// entries at the pivot positions.
///
/// Over Q(t) each vector is then rescaled to a primitive polynomial vector
/// (denominators cleared, common factor removed) whose free coordinate has
/// leading coefficient 1. This is again a basis of the same space.
template <FieldScalar K>
std::vector<std::vector<K>> kernel_basis_field(const Matrix<K>& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols());
        v[f] = K(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
        if constexpr (std::same_as<K, RatFunc>) {
            Poly lcm_den(Rational(1));
            for (const auto& x : v) {
                if (x.is_zero()) continue;
                lcm_den = exact_div(lcm_den * x.den(), poly_gcd(lcm_den, x.den()));
            }
            std::vector<Poly> num(v.size());
            Poly content;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_zero()) continue;
                num[i] = v[i].num() * exact_div(lcm_den, v[i].den());
                content = content.is_zero() ? num[i].monic() : poly_gcd(content, num[i]);
            }
            Rational scale = exact_div(num[f], content).leading().inverse();
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] = num[i].is_zero() ? RatFunc() : RatFunc(exact_div(num[i], content) * scale);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the column space: the original columns at the pivot positions.
template <FieldScalar K>
Matrix<K> column_space_basis(const Matrix<K>& m) {
    auto piv = rref(m).pivots;
    return m.select_columns(piv);
}

/// Kernel basis packed as the columns of a cols x nullity matrix.
template <FieldScalar K>
Matrix<K> kernel_matrix(const Matrix<K>& m) {
    return from_columns(kernel_basis_field(m), m.cols());
}

/// Exact inverse by Gauss-Jordan elimination. Throws Singular.
template <FieldScalar K>
Matrix<K> inverse_field(const Matrix<K>& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse", 0, "square matrix", m.shape_string());
    const std::size_t n = m.rows();
    Matrix<K> aug = hstack(m, Matrix<K>::identity(n));
    auto piv = detail::eliminate(aug, true);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw Singular();
    return aug.block(0, n, n, n);
}

/// Unique solution X of A X = B for square invertible A.
template <FieldScalar K>
Matrix<K> solve_field(const Matrix<K>& a, const Matrix<K>& b) {
    if (!a.is_square()) throw ShapeMismatch("solve", 0, "square matrix", a.shape_string());
    if (a.rows() != b.rows()) throw ShapeMismatch("solve", 0, std::to_string(a.rows()) + " rows", b.shape_string());
    const std::size_t n = a.rows();
    Matrix<K> aug = hstack(a, b);
    auto piv = detail::eliminate(aug, true);
    if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw Singular();
    return aug.block(0, n, n, b.cols());
}

template <FieldScalar K>
K determinant(Matrix<K> m) {
    if (!m.is_square()) throw ShapeMismatch("determinant", 0, "square matrix", m.shape_string());
    K det(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = detail::choose_pivot_row(m, col, col);
        if (p == n) return K();
        if (p != col) {
            detail::swap_rows(m, col, p);
            det = -det;
        }
        det *= m(col, col);
        K inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            K factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!m(col, j).is_zero()) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

template <FieldScalar K>
bool is_invertible(const Matrix<K>& m) {
    return m.is_square() && rank(m) == m.rows();
}

/// dim(span of columns of a) == dim(span of columns of a and b) == dim(span of b):
/// column spaces are equal.
template <FieldScalar K>
bool same_column_space(const Matrix<K>& a, const Matrix<K>& b) {
    std::size_t ra = rank(a), rb = rank(b);
    return ra == rb && rank(hstack(a, b)) == ra;
}

/// Entry-wise Q[t] determinant by fraction-free (Bareiss) elimination.
Poly determinant(MatrixP m);

}  // namespace linkhom

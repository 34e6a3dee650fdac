#include "linkhom/snf.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "linkhom/linalg.hpp"

namespace linkhom {

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k)
        if (!D(k, k).is_zero()) ++r;
    return r;
}

std::vector<Poly> SnfResult::invariant_factors() const {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < std::min(D.rows(), D.cols()); ++k) out.push_back(D(k, k));
    return out;
}

namespace {

// Column operations on a square matrix, used to keep an inverse in step with
// row operations on its partner (and transposed for column partners).
void col_axpy(MatrixP& m, std::size_t dst, const Poly& q, std::size_t src) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!m(i, src).is_zero()) m(i, dst) += q * m(i, src);
}

void row_axpy(MatrixP& m, std::size_t dst, const Poly& q, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(src, j).is_zero()) m(dst, j) += q * m(src, j);
}

// D with the accumulated transforms U (row operations) and V (column
// operations); ui, vi, when present, hold U^-1 and V^-1.
struct Workspace {
    MatrixP d, u, v;
    std::optional<MatrixP> ui, vi;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
        if (ui)
            for (std::size_t i = 0; i < ui->rows(); ++i) std::swap((*ui)(i, a), (*ui)(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
        if (vi)
            for (std::size_t j = 0; j < vi->cols(); ++j) std::swap((*vi)(a, j), (*vi)(b, j));
    }
    // row_i -= q * row_k
    void sub_row(std::size_t i, std::size_t k, const Poly& q, std::size_t from_col) {
        for (std::size_t j = from_col; j < d.cols(); ++j)
            if (!d(k, j).is_zero()) d(i, j) -= q * d(k, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (!u(k, j).is_zero()) u(i, j) -= q * u(k, j);
        if (ui) col_axpy(*ui, k, q, i);
    }
    // col_j -= q * col_k
    void sub_col(std::size_t j, std::size_t k, const Poly& q, std::size_t from_row) {
        for (std::size_t i = from_row; i < d.rows(); ++i)
            if (!d(i, k).is_zero()) d(i, j) -= q * d(i, k);
        for (std::size_t i = 0; i < v.rows(); ++i)
            if (!v(i, k).is_zero()) v(i, j) -= q * v(i, k);
        if (vi) row_axpy(*vi, k, q, j);
    }
    // row_k += row_i
    void add_row(std::size_t k, std::size_t i, std::size_t from_col) {
        for (std::size_t j = from_col; j < d.cols(); ++j) d(k, j) += d(i, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) += u(i, j);
        if (ui) col_axpy(*ui, i, Poly(Rational(-1)), k);
    }
    void scale_row(std::size_t k, const Rational& c) {
        if (c.is_one()) return;
        for (std::size_t j = 0; j < d.cols(); ++j) d(k, j) *= c;
        for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) *= c;
        if (ui) {
            const Rational inv = c.inverse();
            for (std::size_t i = 0; i < ui->rows(); ++i) (*ui)(i, k) *= inv;
        }
    }
    void make_pivot_monic(std::size_t k) { scale_row(k, d(k, k).leading().inverse()); }
};

// Row-style Hermite form: U * A = H with H in echelon form, monic pivots,
// and every entry above a pivot of lower degree than the pivot. Rows are
// inserted one at a time and the form is re-reduced after each insertion,
// which keeps entry sizes close to those of the final form.
//
// While working, row `id` of U is the transform of the row that started as
// row `id` of A; the rows are put in echelon order only at the end.
struct HermiteRow {
    std::vector<Poly> h;
    std::size_t id = 0;
    std::size_t pivot = 0;
};

struct Hermite {
    MatrixP u;                 // rows indexed by id
    std::optional<MatrixP> ui;  // U^-1, columns indexed by id

    // x <- x - q * y
    void sub_multiple(HermiteRow& x, const Poly& q, const HermiteRow& y) {
        for (std::size_t j = 0; j < x.h.size(); ++j)
            if (!y.h[j].is_zero()) x.h[j] -= q * y.h[j];
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (!u(y.id, j).is_zero()) u(x.id, j) -= q * u(y.id, j);
        if (ui) col_axpy(*ui, y.id, q, x.id);
    }

    void scale(HermiteRow& x, const Rational& c) {
        if (c.is_one()) return;
        for (auto& e : x.h) e *= c;
        for (std::size_t j = 0; j < u.cols(); ++j) u(x.id, j) *= c;
        if (ui) {
            const Rational inv = c.inverse();
            for (std::size_t i = 0; i < ui->rows(); ++i) (*ui)(i, x.id) *= inv;
        }
    }

    // (p, v) <- (a p + b v, -w p + z v) for a unimodular [a b; -w z].
    void combine(HermiteRow& p, HermiteRow& v, const Poly& a, const Poly& b, const Poly& w, const Poly& z) {
        for (std::size_t j = 0; j < p.h.size(); ++j) {
            Poly np = a * p.h[j] + b * v.h[j];
            Poly nv = z * v.h[j] - w * p.h[j];
            p.h[j] = std::move(np);
            v.h[j] = std::move(nv);
        }
        for (std::size_t j = 0; j < u.cols(); ++j) {
            Poly np = a * u(p.id, j) + b * u(v.id, j);
            Poly nv = z * u(v.id, j) - w * u(p.id, j);
            u(p.id, j) = std::move(np);
            u(v.id, j) = std::move(nv);
        }
        if (ui) {
            // Inverse [z -b; w a], applied on the right.
            MatrixP& m = *ui;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Poly cp = m(i, p.id) * z + m(i, v.id) * w;
                Poly cv = m(i, v.id) * a - m(i, p.id) * b;
                m(i, p.id) = std::move(cp);
                m(i, v.id) = std::move(cv);
            }
        }
    }

    // Clears column c of v against the pivot row p (pivot at c).
    void eliminate_against(HermiteRow& p, HermiteRow& v, std::size_t c) {
        const Poly h = p.h[c], x = v.h[c];
        auto [q, rem] = divmod(x, h);
        if (rem.is_zero()) {
            sub_multiple(v, q, p);
            return;
        }
        XgcdResult e = poly_xgcd(h, x);
        combine(p, v, e.a, e.b, exact_div(x, e.g), exact_div(h, e.g));
        v.h[c] = Poly();
    }

    void reduce_above(std::vector<HermiteRow>& piv) {
        for (std::size_t j = 0; j < piv.size(); ++j) {
            const std::size_t c = piv[j].pivot;
            scale(piv[j], piv[j].h[c].leading().inverse());
            const Poly& h = piv[j].h[c];
            for (std::size_t i = 0; i < j; ++i) {
                const Poly& x = piv[i].h[c];
                if (x.is_zero() || x.degree() < h.degree()) continue;
                Poly q = x / h;
                sub_multiple(piv[i], q, piv[j]);
            }
        }
    }
};

struct HermiteResult {
    MatrixP u, h;
    std::optional<MatrixP> ui;
};

std::size_t leading_column(const std::vector<Poly>& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return j;
    return v.size();
}

HermiteResult hermite_rows(const MatrixP& a, bool track_inverse) {
    const std::size_t rows = a.rows(), cols = a.cols();
    Hermite w{MatrixP::identity(rows), std::nullopt};
    if (track_inverse) w.ui = MatrixP::identity(rows);
    std::vector<HermiteRow> piv;
    std::vector<std::size_t> kernel_ids;
    for (std::size_t r = 0; r < rows; ++r) {
        HermiteRow v;
        v.h.assign(a.row(r).begin(), a.row(r).end());
        v.id = r;
        std::size_t p = 0;
        for (;;) {
            const std::size_t lead = leading_column(v.h);
            if (lead == cols) {
                kernel_ids.push_back(v.id);
                break;
            }
            while (p < piv.size() && piv[p].pivot < lead) ++p;
            if (p == piv.size() || piv[p].pivot > lead) {
                v.pivot = lead;
                piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(p), std::move(v));
                break;
            }
            w.eliminate_against(piv[p], v, lead);
        }
        w.reduce_above(piv);
    }

    // Output row i is the working row order[i].
    std::vector<std::size_t> order;
    for (const auto& row : piv) order.push_back(row.id);
    order.insert(order.end(), kernel_ids.begin(), kernel_ids.end());
    HermiteResult out{MatrixP(rows, rows), MatrixP(rows, cols), std::nullopt};
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.h(i, j) = std::move(piv[i].h[j]);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) out.u(i, j) = std::move(w.u(order[i], j));
    if (w.ui) {
        out.ui = MatrixP(rows, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < rows; ++j) (*out.ui)(i, j) = std::move((*w.ui)(i, order[j]));
    }
    return out;
}

bool at_most_one_per_row(const MatrixP& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        int nz = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) ++nz;
        if (nz > 1) return false;
    }
    return true;
}

// Euclidean pivoting on w.d, recording row operations in w.u and column
// operations in w.v.
void euclidean_pass(Workspace& w) {
    const std::size_t rows = w.d.rows(), cols = w.d.cols();
    const std::size_t steps = std::min(rows, cols);

    for (std::size_t k = 0; k < steps; ++k) {
        // Global pivot: minimal degree, then smallest row, then smallest column.
        std::size_t pi = rows, pj = cols;
        int best = std::numeric_limits<int>::max();
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                const Poly& x = w.d(i, j);
                if (!x.is_zero() && x.degree() < best) {
                    best = x.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);
        w.make_pivot_monic(k);

        for (;;) {
            const Poly pivot = w.d(k, k);
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (w.d(i, k).is_zero()) continue;
                Poly q = w.d(i, k) / pivot;
                if (!q.is_zero()) w.sub_row(i, k, q, k);
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (w.d(k, j).is_zero()) continue;
                Poly q = w.d(k, j) / pivot;
                if (!q.is_zero()) w.sub_col(j, k, q, k);
            }

            // Nonzero remainders in row/column k have lower degree than the pivot.
            std::size_t ri = rows, cj = cols;
            int low = std::numeric_limits<int>::max();
            for (std::size_t i = k + 1; i < rows; ++i) {
                const Poly& x = w.d(i, k);
                if (!x.is_zero() && x.degree() < low) {
                    low = x.degree();
                    ri = i;
                    cj = cols;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                const Poly& x = w.d(k, j);
                if (!x.is_zero() && x.degree() < low) {
                    low = x.degree();
                    ri = rows;
                    cj = j;
                }
            }
            if (ri < rows) {
                w.swap_rows(k, ri);
                w.make_pivot_monic(k);
                continue;
            }
            if (cj < cols) {
                w.swap_cols(k, cj);
                w.make_pivot_monic(k);
                continue;
            }

            // Row and column cleared; enforce d_k | remaining entries.
            bool fixed = true;
            for (std::size_t i = k + 1; i < rows && fixed; ++i)
                for (std::size_t j = k + 1; j < cols; ++j) {
                    const Poly& x = w.d(i, j);
                    if (!x.is_zero() && !divides(pivot, x)) {
                        w.add_row(k, i, k);
                        fixed = false;
                        break;
                    }
                }
            if (fixed) break;
        }
    }
}

}  // namespace


SnfResult smith_normal_form(const MatrixP& m, bool with_inverses) {
    // Alternate row and column Hermite forms until every row and column has
    // at most one nonzero entry, then finish with Euclidean pivoting, which
    // orders the entries and enforces the divisibility chain.
    Workspace w{m, MatrixP::identity(m.rows()), MatrixP::identity(m.cols()), std::nullopt, std::nullopt};
    if (with_inverses) {
        w.ui = w.u;
        w.vi = w.v;
    }
    for (;;) {
        HermiteResult rowf = hermite_rows(w.d, with_inverses);
        w.u = rowf.u * w.u;
        if (w.ui) w.ui = *w.ui * *rowf.ui;
        w.d = std::move(rowf.h);
        if (at_most_one_per_row(w.d)) break;

        HermiteResult colf = hermite_rows(w.d.transpose(), with_inverses);
        w.v = w.v * colf.u.transpose();
        if (w.vi) w.vi = colf.ui->transpose() * *w.vi;
        const bool done = at_most_one_per_row(colf.h);
        w.d = colf.h.transpose();
        if (done) break;
    }
    euclidean_pass(w);
    SnfResult out{std::move(w.u), std::move(w.d), std::move(w.v), std::nullopt, std::nullopt};
    if (with_inverses) {
        out.U_inv = std::move(w.ui);
        out.V_inv = std::move(w.vi);
    }
    return out;
}

std::vector<std::vector<Poly>> kernel_basis_pid(const MatrixP& m) {
    SnfResult snf = smith_normal_form(m);
    std::size_t r = snf.rank();
    std::vector<std::vector<Poly>> basis;
    for (std::size_t j = r; j < m.cols(); ++j) basis.push_back(snf.V.column_vector(j));
    return basis;
}

Poly determinant(MatrixP m) {
    if (!m.is_square()) throw ShapeMismatch("determinant", 0, "square matrix", m.shape_string());
    const std::size_t n = m.rows();
    if (n == 0) return Poly(Rational(1));
    Poly prev(Rational(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return Poly();
            detail::swap_rows(m, k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) m(i, k) = Poly();
    }
    Poly det = m(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace linkhom

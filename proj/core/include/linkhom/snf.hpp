#pragma once

#include <optional>
#include <vector>

#include "linkhom/matrix.hpp"

namespace linkhom {

/// U * M * V = D with U, V unimodular over Q[t] (constant nonzero
/// determinant) and D diagonal with monic-or-zero entries d_1 | d_2 | ...
struct SnfResult {
    MatrixP U;
    MatrixP D;
    MatrixP V;
    /// Inverses of U and V, when requested.
    std::optional<MatrixP> U_inv;
    std::optional<MatrixP> V_inv;

    /// Number of nonzero diagonal entries of D.
    std::size_t rank() const;
    /// The diagonal d_1 .. d_min(rows, cols), trailing zeros included.
    std::vector<Poly> invariant_factors() const;
};

/// Smith normal form over the Euclidean domain Q[t].
///
/// Row and column Hermite forms (extended-gcd row operations, entries above
/// each pivot reduced modulo it) are alternated until at most one entry per
/// row and column is nonzero; this bounds the degrees of U and V by roughly
/// the degree of the largest minor. A final Euclidean pass then pivots on the
/// nonzero entry of minimal degree (ties broken by smallest row, then
/// column) and adds rows until each pivot divides everything after it.
///
/// With `with_inverses` the inverses of U and V are tracked through the same
/// operations, which gives a cheap exact certificate of unimodularity.
SnfResult smith_normal_form(const MatrixP& m, bool with_inverses = false);

/// Free basis of ker(M) over Q[t]: the columns of V indexed by the zero
/// diagonal positions of D. Because V is unimodular these columns extend to
/// a basis of the ambient module, so their reductions at any t = a remain
/// linearly independent.
std::vector<std::vector<Poly>> kernel_basis_pid(const MatrixP& m);

}  // namespace linkhom

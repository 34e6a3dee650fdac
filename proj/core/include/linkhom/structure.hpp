#pragma once

#include <utility>
#include <vector>

#include "linkhom/solver.hpp"

namespace linkhom {

/// Local splitting G_i = G'_i (+) G''_i near a point, in which every g_i is
/// an isomorphism G'_i -> G'_{i+1} and every g^i an isomorphism
/// G''_{i+1} -> G''_i. All matrices are over Q(t) and regular at `point`.
struct StructureDecomposition {
    FiberPoint point = FiberPoint::generic();
    std::size_t ell = 0;  // rank m1 of every G'_i; G''_i has rank m - ell
    bool trivial = false;  // G' = G, G'' = 0 (s is a unit at the point)
    std::vector<MatrixRF> basis_prime;     // n matrices m x ell
    std::vector<MatrixRF> basis_dblprime;  // n matrices m x (m - ell)
    std::vector<MatrixRF> gp_fwd;          // n-1 matrices (g_i)', ell x ell
    std::vector<MatrixRF> gdp_bwd;         // n-1 matrices (g^i)'', (m - ell) x (m - ell)

    std::size_t m() const { return basis_prime.empty() ? 0 : basis_prime.front().rows(); }
    std::size_t m2() const { return m() - ell; }
    /// [basis_prime_i | basis_dblprime_i] for 1-based i.
    MatrixRF frame(std::size_t i) const { return hstack(basis_prime.at(i - 1), basis_dblprime.at(i - 1)); }
};

/// Builds the splitting at x.
///
/// When s does not vanish at x the g_i are invertible near x and the trivial
/// splitting G' = G, G'' = 0 is returned. Otherwise:
///  1. G'_1 is spanned by the unit vectors at the pivot columns of
///     rref(g_1 at x), a complement of its kernel; G''_n likewise from g^{n-1}.
///  2. These constant vectors are transported: G'_i = g_{1,i} G'_1 and
///     G''_i = g^{n,i} G''_n.
///  3. Each transport must stay injective at x and the two blocks must be
///     complementary at x, for every i.
///  4. The block maps are read off in these bases over Q(t), and must be
///     regular and invertible at x.
///
/// Throws ComplementarityFailure, FullRankFailure, or PoleAtPoint.
StructureDecomposition structure_decomposition(const LinkedChain& chain, const FiberPoint& x);

/// phi_i = B'_i ((g_{i,n})')^-1 phi_n' f_{i,n} + B''_i ((g^{i,1})'')^-1 phi_1'' f^{i,1},
/// with B', B'' the bases of the decomposition.
LinkedHomTuple<RatFunc> reconstruct(const LinkedChain& chain, const StructureDecomposition& decomp,
                                    const MatrixRF& phi1_dblprime, const MatrixRF& phin_prime);
LinkedHomTuple<RatFunc> reconstruct(const LinkedChain& chain, const StructureDecomposition& decomp,
                                    const MatrixQ& phi1_dblprime, const MatrixQ& phin_prime);

/// (G''-component of phi_1, G'-component of phi_n) in the decomposed bases.
std::pair<MatrixRF, MatrixRF> forget(const StructureDecomposition& decomp, const LinkedHomTuple<RatFunc>& tuple);

}  // namespace linkhom

#include "linkhom/structure.hpp"

namespace linkhom {

namespace {

// Unit vectors e_p (p in pivots) as the columns of an m x |pivots| matrix.
MatrixP coordinate_basis(std::size_t m, const std::vector<std::size_t>& pivots) {
    MatrixP b(m, pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) b(pivots[k], k) = Poly(Rational(1));
    return b;
}

template <FieldScalar K>
std::vector<std::size_t> pivot_columns_at(const MatrixP& g, const FiberPoint& x) {
    return rref(specialize<K>(g, x)).pivots;
}

// Rank of a Q(t) matrix in the fiber at x; the entries must be regular there.
std::size_t rank_at(const MatrixRF& m, const FiberPoint& x) {
    if (x.is_generic()) return rank(m);
    if (!is_regular_at(m, x.value())) throw PoleAtPoint(x.to_string());
    return rank(eval_at(m, x.value()));
}

std::size_t rank_at(const MatrixP& m, const FiberPoint& x) {
    if (x.is_generic()) return rank(to_ratfunc(m));
    return rank(eval_at(m, x.value()));
}

void require_regular(const MatrixRF& m, const FiberPoint& x) {
    if (!x.is_generic() && !is_regular_at(m, x.value())) throw PoleAtPoint(x.to_string());
}

StructureDecomposition trivial_decomposition(const LinkedChain& chain, const FiberPoint& x) {
    StructureDecomposition d;
    d.point = x;
    d.trivial = true;
    d.ell = chain.m();
    for (std::size_t i = 1; i <= chain.n(); ++i) {
        d.basis_prime.push_back(MatrixRF::identity(chain.m()));
        d.basis_dblprime.emplace_back(chain.m(), 0);
    }
    for (std::size_t i = 1; i < chain.n(); ++i) {
        if (rank_at(chain.g(i), x) != chain.m()) throw FullRankFailure(FullRankFailure::Which::ForwardBlock, i);
        d.gp_fwd.push_back(to_ratfunc(chain.g(i)));
        d.gdp_bwd.emplace_back(0, 0);
    }
    return d;
}

}  // namespace

StructureDecomposition structure_decomposition(const LinkedChain& chain, const FiberPoint& x) {
    const std::size_t n = chain.n(), m = chain.m();
    if (!x.vanishes(chain.s()) || n == 1) return trivial_decomposition(chain, x);

    auto [fwd_pivots, bwd_pivots] = with_residue_field(x, [&](auto tag) {
        using K = decltype(tag);
        return std::pair{pivot_columns_at<K>(chain.g(1), x), pivot_columns_at<K>(chain.g_up(n - 1), x)};
    });
    const MatrixP lift_prime = coordinate_basis(m, fwd_pivots);
    const MatrixP lift_dblprime = coordinate_basis(m, bwd_pivots);
    const std::size_t ell = lift_prime.cols();
    const std::size_t ell2 = lift_dblprime.cols();

    StructureDecomposition d;
    d.point = x;
    d.ell = ell;
    std::vector<MatrixRF> frame_inv;
    MatrixP forward = lift_prime;
    std::vector<MatrixP> backward(n);
    backward[n - 1] = lift_dblprime;
    for (std::size_t i = n - 1; i >= 1; --i) backward[i - 1] = chain.g_up(i) * backward[i];

    for (std::size_t i = 1; i <= n; ++i) {
        if (i > 1) forward = chain.g(i - 1) * forward;
        const MatrixP& back = backward[i - 1];
        if (rank_at(forward, x) != ell) throw FullRankFailure(FullRankFailure::Which::ForwardTransport, i);
        if (rank_at(back, x) != ell2) throw FullRankFailure(FullRankFailure::Which::BackwardTransport, i);
        MatrixP frame = hstack(forward, back);
        if (ell + ell2 != m)
            throw ComplementarityFailure(i, "dim G'_1 + dim G''_n = " + std::to_string(ell + ell2) + ", m = " +
                                                std::to_string(m));
        if (rank_at(frame, x) != m)
            throw ComplementarityFailure(i, "[G'_i | G''_i] has rank " + std::to_string(rank_at(frame, x)));
        d.basis_prime.push_back(to_ratfunc(forward));
        d.basis_dblprime.push_back(to_ratfunc(back));
        frame_inv.push_back(inverse_field(to_ratfunc(frame)));
    }

    for (std::size_t i = 1; i < n; ++i) {
        // g_i B'_i = B'_{i+1} (g_i)' with no G'' component.
        MatrixRF coords = frame_inv[i] * (to_ratfunc(chain.g(i)) * d.basis_prime[i - 1]);
        if (!coords.block(ell, 0, ell2, ell).is_zero())
            throw FullRankFailure(FullRankFailure::Which::NotPreserved, i);
        MatrixRF block = coords.block(0, 0, ell, ell);
        require_regular(block, x);
        if (rank_at(block, x) != ell) throw FullRankFailure(FullRankFailure::Which::ForwardBlock, i);
        d.gp_fwd.push_back(std::move(block));

        // g^i B''_{i+1} = B''_i (g^i)'' with no G' component.
        MatrixRF back = frame_inv[i - 1] * (to_ratfunc(chain.g_up(i)) * d.basis_dblprime[i]);
        if (!back.block(0, 0, ell, ell2).is_zero()) throw FullRankFailure(FullRankFailure::Which::NotPreserved, i);
        MatrixRF bblock = back.block(ell, 0, ell2, ell2);
        require_regular(bblock, x);
        if (rank_at(bblock, x) != ell2) throw FullRankFailure(FullRankFailure::Which::BackwardBlock, i);
        d.gdp_bwd.push_back(std::move(bblock));
    }
    return d;
}

LinkedHomTuple<RatFunc> reconstruct(const LinkedChain& chain, const StructureDecomposition& decomp,
                                    const MatrixRF& phi1_dblprime, const MatrixRF& phin_prime) {
    const std::size_t n = chain.n(), r = chain.r(), ell = decomp.ell, ell2 = chain.m() - decomp.ell;
    if (decomp.basis_prime.size() != n || decomp.gp_fwd.size() + 1 != n)
        throw ShapeMismatch("decomposition", 0, std::to_string(n) + " positions",
                            std::to_string(decomp.basis_prime.size()));
    if (phi1_dblprime.rows() != ell2 || phi1_dblprime.cols() != r)
        throw ShapeMismatch("phi1_dblprime", 0, std::to_string(ell2) + "x" + std::to_string(r),
                            phi1_dblprime.shape_string());
    if (phin_prime.rows() != ell || phin_prime.cols() != r)
        throw ShapeMismatch("phin_prime", 0, std::to_string(ell) + "x" + std::to_string(r), phin_prime.shape_string());

    // fwd_inv[i-1] = ((g_{i,n})')^-1, built from i = n down.
    std::vector<MatrixRF> fwd_inv(n);
    fwd_inv[n - 1] = MatrixRF::identity(ell);
    for (std::size_t i = n - 1; i >= 1; --i) fwd_inv[i - 1] = inverse_field(decomp.gp_fwd[i - 1]) * fwd_inv[i];
    // bwd_inv[i-1] = ((g^{i,1})'')^-1, built from i = 1 up.
    std::vector<MatrixRF> bwd_inv(n);
    bwd_inv[0] = MatrixRF::identity(ell2);
    for (std::size_t i = 1; i < n; ++i) bwd_inv[i] = inverse_field(decomp.gdp_bwd[i - 1]) * bwd_inv[i - 1];

    LinkedHomTuple<RatFunc> out;
    for (std::size_t i = 1; i <= n; ++i) {
        MatrixRF f_to_n = to_ratfunc(composite(chain, Family::FFwd, i, n));
        MatrixRF f_to_1 = to_ratfunc(composite(chain, Family::FBwd, 1, i));
        MatrixRF phi = decomp.basis_prime[i - 1] * (fwd_inv[i - 1] * (phin_prime * f_to_n)) +
                       decomp.basis_dblprime[i - 1] * (bwd_inv[i - 1] * (phi1_dblprime * f_to_1));
        require_regular(phi, decomp.point);
        out.phis.push_back(std::move(phi));
    }
    return out;
}

LinkedHomTuple<RatFunc> reconstruct(const LinkedChain& chain, const StructureDecomposition& decomp,
                                    const MatrixQ& phi1_dblprime, const MatrixQ& phin_prime) {
    return reconstruct(chain, decomp, to_ratfunc(phi1_dblprime), to_ratfunc(phin_prime));
}

std::pair<MatrixRF, MatrixRF> forget(const StructureDecomposition& decomp, const LinkedHomTuple<RatFunc>& tuple) {
    const std::size_t n = decomp.basis_prime.size();
    if (tuple.phis.size() != n)
        throw ShapeMismatch("phis", 0, std::to_string(n) + " matrices", std::to_string(tuple.phis.size()));
    const std::size_t ell = decomp.ell, ell2 = decomp.m2();
    MatrixRF first = solve_field(decomp.frame(1), tuple.phis.front());
    MatrixRF last = solve_field(decomp.frame(n), tuple.phis.back());
    return {first.block(ell, 0, ell2, first.cols()), last.block(0, 0, ell, last.cols())};
}

}  // namespace linkhom

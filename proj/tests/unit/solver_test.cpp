#include <gtest/gtest.h>

#include "builders.hpp"
#include "linkhom/conditions.hpp"
#include "linkhom/generator.hpp"
#include "linkhom/snf.hpp"
#include "linkhom/solver.hpp"
#include "linkhom/structure.hpp"
#include "sweep.hpp"

namespace linkhom {
namespace {

using testing::T;
using testing::tp;

GenParams params(long r, long m, long m1, long n, Poly s, std::uint64_t seed, bool conjugate = true) {
    GenParams p;
    p.r = r;
    p.m = m;
    p.m1 = m1;
    p.n = n;
    p.s = std::move(s);
    p.seed = seed;
    p.conjugate = conjugate;
    return p;
}

MatrixQ unit_column(std::size_t m, std::size_t k) {
    MatrixQ v(m, 1);
    v(k, 0) = Rational(1);
    return v;
}

TEST(ConstraintMatrix, Shapes) {
    MatrixP c = constraint_matrix(counterexample_chain());
    EXPECT_EQ(c.rows(), 12u);
    EXPECT_EQ(c.cols(), 9u);

    MatrixP one = constraint_matrix(testing::identity_chain(2, 3, 1));
    EXPECT_EQ(one.rows(), 0u);
    EXPECT_EQ(one.cols(), 6u);
}

TEST(ConstraintMatrix, ScalarChain) {
    // Block (a) reads t*phi_2 - t*phi_1, block (b) t*phi_1 - t*phi_2.
    MatrixP c = constraint_matrix(testing::scalar_chain(tp(2), T, T, T, T));
    EXPECT_EQ(c, (MatrixP{{-T, T}, {T, -T}}));
}

TEST(FiberDimension, Counterexample) {
    LinkedChain c = counterexample_chain();
    EXPECT_EQ(fiber_dimension(c, FiberPoint::at(0)), 4u);
    EXPECT_EQ(fiber_dimension(c, FiberPoint::generic()), 3u);
    EXPECT_EQ(fiber_dimension(c, FiberPoint::at(1)), 3u);
}

TEST(FiberDimension, SinglePosition) {
    LinkedChain c = testing::identity_chain(2, 3, 1);
    EXPECT_EQ(fiber_dimension(c, FiberPoint::at(5)), 6u);
    EXPECT_EQ(fiber_dimension(c, FiberPoint::generic()), 6u);
}

TEST(VectorBundleCheck, Counterexample) {
    SolveReport rep = vector_bundle_check(counterexample_chain());
    EXPECT_FALSE(rep.is_vector_bundle);
    EXPECT_TRUE(rep.flatness_failure);
    EXPECT_EQ(rep.rm, 3u);
    EXPECT_EQ(rep.generic_dim, 3u);
    EXPECT_EQ(rep.dim_at(FiberPoint::at(0)), std::optional<std::size_t>(4));
    ASSERT_EQ(rep.jump_points.size(), 1u);
    EXPECT_EQ(rep.jump_points[0], FiberPoint::at(0));
    EXPECT_TRUE(rep.fiber_dims.back().first.is_generic());
}

TEST(VectorBundleCheck, GeneratedValidChain) {
    SolveReport rep = vector_bundle_check(gen_valid_chain(params(2, 3, 1, 3, T, 7)));
    EXPECT_TRUE(rep.is_vector_bundle);
    for (const auto& [x, d] : rep.fiber_dims) EXPECT_EQ(d, 6u) << x.to_string();
}

TEST(VectorBundleCheck, IdentityChainBasisIsDiagonal) {
    SolveOptions opts;
    opts.want_basis = true;
    SolveReport rep = vector_bundle_check(testing::identity_chain(1, 2, 3), opts);
    EXPECT_TRUE(rep.is_vector_bundle);
    ASSERT_TRUE(rep.kernel_basis);
    ASSERT_EQ(rep.kernel_basis->size(), 2u);
    for (const auto& tuple : *rep.kernel_basis) {
        ASSERT_EQ(tuple.phis.size(), 3u);
        EXPECT_EQ(tuple.phis[0], tuple.phis[1]);
        EXPECT_EQ(tuple.phis[1], tuple.phis[2]);
        EXPECT_FALSE(tuple.phis[0].is_zero());
    }
}

TEST(VectorBundleCheck, ExtraPointsAndZeroS) {
    SolveOptions opts;
    opts.extra_points = {Rational(5, 3)};
    SolveReport rep = vector_bundle_check(counterexample_chain(), opts);
    EXPECT_EQ(rep.dim_at(FiberPoint::at(Rational(5, 3))), std::optional<std::size_t>(3));

    SolveReport z = vector_bundle_check(gen_valid_chain(params(1, 2, 1, 3, Poly(), 4)));
    EXPECT_TRUE(z.is_vector_bundle);
    EXPECT_GT(z.fiber_dims.size(), 2u);
}

TEST(VectorBundleCheck, KernelBasisSatisfiesLinkage) {
    SolveOptions opts;
    opts.want_basis = true;
    LinkedChain c = gen_valid_chain(params(2, 3, 2, 3, Poly{0, -1, 1}, 12));
    SolveReport rep = vector_bundle_check(c, opts);
    ASSERT_TRUE(rep.kernel_basis);
    EXPECT_EQ(rep.kernel_basis->size(), c.rm());
    for (const auto& tuple : *rep.kernel_basis) EXPECT_TRUE(verify_linkage(c, tuple).ok);
}

TEST(StructureDecomposition, CounterexampleHasNoSplitting) {
    EXPECT_THROW(structure_decomposition(counterexample_chain(), FiberPoint::at(0)), ComplementarityFailure);
}

TEST(StructureDecomposition, BlockModelIsTransparent) {
    const long m = 4, m1 = 2;
    LinkedChain c = gen_valid_chain(params(1, m, m1, 3, T, 5, false));
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(0));
    EXPECT_EQ(d.ell, static_cast<std::size_t>(m1));
    EXPECT_FALSE(d.trivial);
    for (std::size_t i = 1; i <= c.n(); ++i) {
        // G'_i is the transport of the first m1 coordinates.
        MatrixP transported = composite(c, Family::GFwd, 1, i).block(0, 0, m, m1);
        EXPECT_EQ(d.basis_prime[i - 1], to_ratfunc(transported));
        EXPECT_TRUE(d.basis_prime[i - 1].block(m1, 0, m - m1, m1).is_zero());
    }
    for (std::size_t i = 1; i < c.n(); ++i) {
        // In coordinates the block map is the A block of the model.
        MatrixRF top_i = d.basis_prime[i - 1].block(0, 0, m1, m1);
        MatrixRF top_next = d.basis_prime[i].block(0, 0, m1, m1);
        MatrixRF a = to_ratfunc(c.g(i).block(0, 0, m1, m1));
        EXPECT_EQ(top_next * d.gp_fwd[i - 1] * inverse_field(top_i), a);
        EXPECT_TRUE(c.g(i).block(0, m1, m1, m - m1).is_zero());
    }
}

TEST(StructureDecomposition, TrivialAwayFromZerosOfS) {
    LinkedChain c = counterexample_chain();
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(3));
    EXPECT_TRUE(d.trivial);
    EXPECT_EQ(d.ell, 3u);
    EXPECT_EQ(d.m2(), 0u);
    EXPECT_EQ(d.basis_dblprime[0].cols(), 0u);
}

TEST(Reconstruct, ZeroInputGivesZeroTuple) {
    LinkedChain c = gen_valid_chain(params(2, 3, 1, 3, T, 9));
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(0));
    auto tuple = reconstruct(c, d, MatrixQ(d.m2(), c.r()), MatrixQ(d.ell, c.r()));
    for (const auto& phi : tuple.phis) EXPECT_TRUE(phi.is_zero());
    auto [pdp, pp] = forget(d, tuple);
    EXPECT_TRUE(pdp.is_zero());
    EXPECT_TRUE(pp.is_zero());
}

TEST(Reconstruct, IdentityChainCopiesInput) {
    LinkedChain c = testing::identity_chain(2, 2, 3);
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(0));
    ASSERT_EQ(d.m2(), 0u);
    MatrixQ p{{1, 2}, {Rational(1, 3), -4}};
    auto tuple = reconstruct(c, d, MatrixQ(0, 2), p);
    for (const auto& phi : tuple.phis) EXPECT_EQ(phi, to_ratfunc(p));
}

TEST(Reconstruct, GeneratedChainIsLinked) {
    LinkedChain c = gen_valid_chain(params(2, 4, 2, 4, tp(2), 11));
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(0));
    auto [pdp, pp] = gen_hom_pair(d.ell, d.m2(), c.r(), 3, 11);
    auto tuple = reconstruct(c, d, pdp, pp);
    EXPECT_TRUE(verify_linkage(c, tuple).ok);
    for (const auto& phi : tuple.phis) EXPECT_TRUE(is_regular_at(phi, Rational(0)));
    auto [back_dp, back_p] = forget(d, tuple);
    EXPECT_EQ(back_dp, to_ratfunc(pdp));
    EXPECT_EQ(back_p, to_ratfunc(pp));
}

TEST(Reconstruct, KernelElementRoundTrip) {
    LinkedChain c = gen_valid_chain(params(1, 3, 1, 3, T, 21));
    StructureDecomposition d = structure_decomposition(c, FiberPoint::at(0));
    SolveOptions opts;
    opts.want_basis = true;
    SolveReport rep = vector_bundle_check(c, opts);
    ASSERT_TRUE(rep.kernel_basis);
    for (const auto& tuple : *rep.kernel_basis) {
        LinkedHomTuple<RatFunc> local;
        for (const auto& phi : tuple.phis) local.phis.push_back(to_ratfunc(phi));
        auto [pdp, pp] = forget(d, local);
        EXPECT_EQ(reconstruct(c, d, pdp, pp), local);
    }
}

TEST(VerifyLinkage, Examples) {
    LinkedChain c = counterexample_chain();
    LinkedHomTuple<Rational> z{{MatrixQ(3, 1), MatrixQ(3, 1), MatrixQ(3, 1)}};
    EXPECT_TRUE(verify_linkage(c, z, Rational(0)).ok);

    LinkedHomTuple<Rational> w{{unit_column(3, 1), MatrixQ(3, 1), unit_column(3, 0)}};
    EXPECT_TRUE(verify_linkage(c, w, Rational(0)).ok);
    EXPECT_FALSE(verify_linkage(c, w, Rational(1)).ok);

    LinkedChain id = testing::identity_chain(1, 2, 2);
    MatrixP a = MatrixP::column({1, 0}), b = MatrixP::column({0, T});
    LinkageResult<Poly> res = verify_linkage(id, LinkedHomTuple<Poly>{{a, b}});
    EXPECT_FALSE(res.ok);
    ASSERT_FALSE(res.residuals.empty());
    EXPECT_EQ(res.residuals[0].index, 1u);
    EXPECT_EQ(res.residuals[0].family, 'a');
    EXPECT_EQ(res.residuals[0].residual, b - a);
}

TEST(Vectorize, RoundTrip) {
    LinkedHomTuple<Rational> t{{MatrixQ{{1, 2}, {3, 4}, {5, 6}}, MatrixQ{{7, 8}, {9, 10}, {11, 12}}}};
    auto v = vectorize(t);
    EXPECT_EQ(v[1], Rational(3));  // column-stacked
    EXPECT_EQ(unvectorize(v, 2, 3, 2), t);
    EXPECT_THROW(unvectorize(v, 2, 3, 3), ShapeMismatch);
}

// Seeded properties.

TEST(SolverProperty, FiberDimensionBoundedBelowByGeneric) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        GenParams p = testing::sweep_params(700 + k, 4, 4);
        p.m = std::max(p.m, 3L);
        p.n = std::max(p.n, 3L);
        if (p.s.is_zero() || p.s.is_constant()) p.s = T;
        LinkedChain c = k % 2 ? gen_valid_chain(p) : gen_broken_chain(p, Condition::III);
        MatrixP cm = constraint_matrix(c);
        const std::size_t g = fiber_dimension(cm, FiberPoint::generic());
        for (int a = -3; a <= 3; ++a) EXPECT_GE(fiber_dimension(cm, FiberPoint::at(a)), g);
    }
}

TEST(SolverProperty, ReconstructionIsLinkedAndInvertible) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        GenParams p = testing::sweep_params(800 + k, 4, 4);
        LinkedChain c = gen_valid_chain(p);
        for (const auto& x : points_to_check(special_points(c))) {
            StructureDecomposition d = structure_decomposition(c, x);
            auto [pdp, pp] = gen_hom_pair(d.ell, d.m2(), c.r(), 4, 800 + k);
            auto tuple = reconstruct(c, d, pdp, pp);
            EXPECT_TRUE(verify_linkage(c, tuple).ok);
            auto [bdp, bp] = forget(d, tuple);
            EXPECT_EQ(bdp, to_ratfunc(pdp));
            EXPECT_EQ(bp, to_ratfunc(pp));
        }
    }
}

}  // namespace
}  // namespace linkhom

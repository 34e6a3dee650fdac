#include <gtest/gtest.h>

#include "builders.hpp"
#include "linkhom/fiber.hpp"
#include "linkhom/generator.hpp"
#include "linkhom/linalg.hpp"
#include "linkhom/snf.hpp"

namespace linkhom {
namespace {

using testing::diagp;
using testing::T;
using testing::tp;

std::vector<Rational> unit(std::size_t n, std::size_t k) {
    std::vector<Rational> v(n);
    v[k] = Rational(1);
    return v;
}

TEST(Rref, Examples) {
    auto id = rref(MatrixQ::identity(3));
    EXPECT_EQ(id.reduced, MatrixQ::identity(3));
    EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2}));

    auto z = rref(MatrixQ::zero(2, 2));
    EXPECT_TRUE(z.reduced.is_zero());
    EXPECT_TRUE(z.pivots.empty());

    auto r = rref(MatrixQ{{1, 2}, {2, 4}});
    EXPECT_EQ(r.reduced, (MatrixQ{{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, EmptyShapes) {
    EXPECT_EQ(rank(MatrixQ(0, 3)), 0u);
    EXPECT_EQ(kernel_basis_field(MatrixQ(0, 3)).size(), 3u);
    EXPECT_TRUE(kernel_basis_field(MatrixQ(2, 0)).empty());
}

TEST(KernelField, Examples) {
    auto k = kernel_basis_field(MatrixQ::diagonal({1, 0, 0}));
    ASSERT_EQ(k.size(), 2u);
    EXPECT_EQ(k[0], unit(3, 1));
    EXPECT_EQ(k[1], unit(3, 2));

    EXPECT_TRUE(kernel_basis_field(MatrixQ::identity(3)).empty());

    auto kt = kernel_basis_field(MatrixRF{{RatFunc(T), RatFunc(-1)}});
    ASSERT_EQ(kt.size(), 1u);
    EXPECT_EQ(kt[0], (std::vector<RatFunc>{RatFunc(1), RatFunc(T)}));
}

TEST(InverseField, Examples) {
    MatrixRF d = MatrixRF::diagonal({RatFunc(1), RatFunc(T)});
    EXPECT_EQ(inverse_field(d), MatrixRF::diagonal({RatFunc(1), ratfunc_reduce(Poly{1}, T)}));
    EXPECT_EQ(inverse_field(MatrixQ::identity(3)), MatrixQ::identity(3));
    EXPECT_EQ(inverse_field(MatrixQ{{1, 1}, {0, 1}}), (MatrixQ{{1, -1}, {0, 1}}));
    EXPECT_THROW(inverse_field(MatrixQ{{1, 2}, {2, 4}}), Singular);
    EXPECT_THROW(inverse_field(MatrixQ(2, 3)), ShapeMismatch);
}

TEST(Snf, Examples) {
    EXPECT_EQ(smith_normal_form(diagp({T, tp(2)})).D, diagp({T, tp(2)}));
    EXPECT_EQ(smith_normal_form(MatrixP{{1, T}, {0, T}}).D, diagp({1, T}));
    EXPECT_EQ(smith_normal_form(MatrixP{{T, 1}, {0, 0}}).D, diagp({1, 0}));
}

TEST(Snf, ReordersToDivisibilityChain) {
    SnfResult r = smith_normal_form(diagp({tp(2), Poly{-1, 1}}));
    EXPECT_EQ(r.D, diagp({1, Poly{0, 0, -1, 1}}));
    EXPECT_EQ(r.U * diagp({tp(2), Poly{-1, 1}}) * r.V, r.D);
}

TEST(Snf, EmptyAndZero) {
    SnfResult e = smith_normal_form(MatrixP(0, 3));
    EXPECT_EQ(e.V.rows(), 3u);
    EXPECT_EQ(e.rank(), 0u);
    SnfResult z = smith_normal_form(MatrixP::zero(2, 3));
    EXPECT_TRUE(z.D.is_zero());
    EXPECT_EQ(z.invariant_factors(), (std::vector<Poly>{Poly(), Poly()}));
}

TEST(Snf, InversesAreTracked) {
    MatrixP m{{T, Poly{1, 1}, tp(2)}, {Poly{0, 2}, Poly{2, 2}, Poly{1, 0, 2}}};
    SnfResult r = smith_normal_form(m, true);
    ASSERT_TRUE(r.U_inv && r.V_inv);
    EXPECT_TRUE((r.U * *r.U_inv).is_identity());
    EXPECT_TRUE((r.V * *r.V_inv).is_identity());
    EXPECT_EQ(r.U * m * r.V, r.D);
}

TEST(KernelPid, Examples) {
    EXPECT_TRUE(kernel_basis_pid(MatrixP{{T}}).empty());

    auto z = kernel_basis_pid(MatrixP::zero(2, 2));
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(from_columns(z, 2), MatrixP::identity(2));

    auto k = kernel_basis_pid(MatrixP{{T, -1}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (std::vector<Poly>{1, T}));
}

TEST(EvalMatrix, Examples) {
    auto q = std::get<MatrixQ>(eval_matrix(diagp({1, tp(2), tp(2)}), FiberPoint::at(0)));
    EXPECT_EQ(q, MatrixQ::diagonal({1, 0, 0}));

    MatrixP m{{T, Poly{1, 1}}, {0, tp(3)}};
    auto g = std::get<MatrixRF>(eval_matrix(m, FiberPoint::generic()));
    EXPECT_EQ(g, to_ratfunc(m));

    auto one = std::get<MatrixQ>(eval_matrix(MatrixP{{Poly{1, 1}}}, FiberPoint::at(1)));
    EXPECT_EQ(one, MatrixQ{{2}});
}

TEST(Determinant, BareissMatchesFieldDeterminant) {
    MatrixP m{{T, 1, 0}, {Poly{1, 1}, tp(2), 2}, {0, 3, Poly{0, 0, 1}}};
    RatFunc d = determinant(to_ratfunc(m));
    EXPECT_EQ(RatFunc(determinant(m)), d);
}

// Seeded properties.

MatrixQ random_q(std::size_t rows, std::size_t cols, Prng& rng) {
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.uniform(0, 2) != 0) m(i, j) = rng.rational(5);
    return m;
}

TEST(LinalgProperty, RrefIsIdempotent) {
    Prng rng(201);
    for (int k = 0; k < 100; ++k) {
        MatrixQ m = random_q(rng.uniform(1, 6), rng.uniform(1, 6), rng);
        auto r = rref(m);
        auto rr = rref(r.reduced);
        EXPECT_EQ(rr.reduced, r.reduced);
        EXPECT_EQ(rr.pivots, r.pivots);
    }
}

TEST(LinalgProperty, KernelAnnihilatesAndRankNullity) {
    Prng rng(202);
    for (int k = 0; k < 100; ++k) {
        MatrixQ m = random_q(rng.uniform(1, 6), rng.uniform(1, 7), rng);
        auto basis = kernel_basis_field(m);
        EXPECT_EQ(rank(m) + basis.size(), m.cols());
        for (const auto& v : basis) EXPECT_TRUE((m * MatrixQ::column(v)).is_zero());
    }
    for (int k = 0; k < 30; ++k) {
        MatrixRF m = to_ratfunc(random_poly_matrix(rng.uniform(1, 4), rng.uniform(1, 5), 2, 3, rng));
        auto basis = kernel_basis_field(m);
        EXPECT_EQ(rank(m) + basis.size(), m.cols());
        for (const auto& v : basis) EXPECT_TRUE((m * MatrixRF::column(v)).is_zero());
    }
}

TEST(LinalgProperty, InverseIsTwoSided) {
    Prng rng(203);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = rng.uniform(1, 5);
        MatrixQ m = random_q(n, n, rng);
        if (!is_invertible(m)) continue;
        MatrixQ inv = inverse_field(m);
        EXPECT_TRUE((m * inv).is_identity());
        EXPECT_TRUE((inv * m).is_identity());
    }
}

TEST(LinalgProperty, SnfInvariants) {
    Prng rng(204);
    for (int k = 0; k < 60; ++k) {
        MatrixP m = random_poly_matrix(rng.uniform(1, 5), rng.uniform(1, 5), 2, 3, rng);
        SnfResult r = smith_normal_form(m);
        EXPECT_EQ(r.U * m * r.V, r.D);
        Poly du = determinant(r.U), dv = determinant(r.V);
        EXPECT_TRUE(du.is_constant() && !du.is_zero());
        EXPECT_TRUE(dv.is_constant() && !dv.is_zero());
        auto f = r.invariant_factors();
        const std::size_t rk = r.rank();
        EXPECT_EQ(rk, rank(to_ratfunc(m)));
        for (std::size_t i = 0; i < f.size(); ++i) {
            EXPECT_EQ(f[i].is_zero(), i >= rk);  // zeros trail
            if (i < rk) EXPECT_TRUE(f[i].leading().is_one());
            if (i + 1 < rk) EXPECT_TRUE(divides(f[i], f[i + 1]));
        }
    }
}

TEST(LinalgProperty, SpecializationNeverRaisesRank) {
    Prng rng(205);
    for (int k = 0; k < 60; ++k) {
        // Products of thin factors make rank drops at special points likely.
        MatrixP a = random_poly_matrix(4, 2, 1, 2, rng), b = random_poly_matrix(2, 4, 1, 2, rng);
        MatrixP m = a * b + MatrixP{{T, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
        const std::size_t generic = rank(to_ratfunc(m));
        std::size_t equal = 0;
        for (int a_int = -3; a_int <= 3; ++a_int) {
            const std::size_t at = rank(eval_at(m, Rational(a_int)));
            EXPECT_LE(at, generic);
            if (at == generic) ++equal;
        }
        EXPECT_GT(equal, 0u);
    }
}

TEST(LinalgProperty, PidKernelStaysIndependentAtPoints) {
    Prng rng(206);
    for (int k = 0; k < 40; ++k) {
        MatrixP a = random_poly_matrix(3, 2, 1, 2, rng), b = random_poly_matrix(2, 5, 1, 2, rng);
        MatrixP m = a * b;
        auto basis = kernel_basis_pid(m);
        EXPECT_EQ(basis.size(), m.cols() - rank(to_ratfunc(m)));
        MatrixP kb = from_columns(basis, m.cols());
        EXPECT_TRUE((m * kb).is_zero());
        for (int a_int = -2; a_int <= 2; ++a_int) EXPECT_EQ(rank(eval_at(kb, Rational(a_int))), basis.size());
    }
}

}  // namespace
}  // namespace linkhom

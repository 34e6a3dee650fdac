#include <gtest/gtest.h>

#include "builders.hpp"
#include "linkhom/conditions.hpp"
#include "linkhom/generator.hpp"
#include "sweep.hpp"

namespace linkhom {
namespace {

using testing::diagp;
using testing::T;
using testing::tp;

ChainSpec counterexample_spec() {
    const Poly s = tp(2);
    ChainSpec spec;
    spec.r = 1;
    spec.m = 3;
    spec.n = 3;
    spec.s = s;
    spec.f_fwd = {MatrixP{{T}}, MatrixP{{T}}};
    spec.f_bwd = spec.f_fwd;
    spec.g_fwd = {diagp({1, s, s}), diagp({1, 1, s})};
    spec.g_bwd = {diagp({s, 1, 1}), diagp({s, s, 1})};
    return spec;
}

TEST(BuildChain, CounterexampleData) {
    LinkedChain c = build_chain(counterexample_spec());
    EXPECT_EQ(c.rm(), 3u);
    EXPECT_EQ(c, counterexample_chain());
}

TEST(BuildChain, SinglePosition) {
    ChainSpec spec;
    spec.r = 2;
    spec.m = 2;
    spec.n = 1;
    spec.s = Poly{1};
    LinkedChain c = build_chain(spec);
    EXPECT_EQ(c.n(), 1u);
    EXPECT_TRUE(c.g_fwd().empty());
}

TEST(BuildChain, ShapeErrors) {
    ChainSpec spec = counterexample_spec();
    spec.g_fwd[0] = MatrixP(2, 3);
    try {
        build_chain(spec);
        FAIL() << "expected ShapeMismatch";
    } catch (const ShapeMismatch& e) {
        EXPECT_EQ(e.list(), "g_fwd");
        EXPECT_EQ(e.index(), 0u);
    }

    ChainSpec short_list = counterexample_spec();
    short_list.f_bwd.pop_back();
    EXPECT_THROW(build_chain(short_list), ShapeMismatch);

    ChainSpec zero_rank = counterexample_spec();
    zero_rank.r = 0;
    EXPECT_THROW(build_chain(zero_rank), ShapeMismatch);
}

TEST(Composite, Examples) {
    LinkedChain c = counterexample_chain();
    EXPECT_EQ(composite(c, Family::GFwd, 1, 3), diagp({1, tp(2), tp(4)}));
    EXPECT_EQ(composite(c, Family::FFwd, 1, 3), MatrixP{{tp(2)}});
    EXPECT_EQ(composite(c, Family::GBwd, 1, 3), diagp({tp(4), tp(2), 1}));
    for (Family f : {Family::FFwd, Family::FBwd, Family::GFwd, Family::GBwd})
        for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(composite(c, f, i, i).is_identity());
    EXPECT_THROW(composite(c, Family::GFwd, 2, 1), IndexOutOfRange);
    EXPECT_THROW(composite(c, Family::GFwd, 1, 4), IndexOutOfRange);
}

TEST(ConditionI, Examples) {
    EXPECT_TRUE(check_condition_I(counterexample_chain()).passed);
    EXPECT_TRUE(check_condition_I(testing::identity_chain(2, 3, 3)).passed);

    LinkedChain bad = testing::scalar_chain(tp(2), T, Poly{0, 2}, T, T);
    ConditionReport rep = check_condition_I(bad);
    EXPECT_FALSE(rep.passed);
    ASSERT_FALSE(rep.failures.empty());
    EXPECT_EQ(rep.failures[0].index, 1u);
    EXPECT_EQ(std::get<MatrixP>(rep.failures[0].witness), MatrixP{{tp(2)}});
}

TEST(SpecialPoints, Examples) {
    SpecialPoints a = special_points(testing::scalar_chain(tp(2), T, T, T, T));
    EXPECT_EQ(a.roots, std::vector<Rational>{0});
    EXPECT_FALSE(a.s_is_zero);
    EXPECT_TRUE(a.warnings.empty());

    EXPECT_EQ(special_points(testing::scalar_chain(Poly{0, -1, 1}, 1, 1, 1, 1)).roots,
              (std::vector<Rational>{0, 1}));

    SpecialPoints irr = special_points(testing::scalar_chain(Poly{1, 0, 1}, 1, 1, 1, 1));
    EXPECT_TRUE(irr.roots.empty());
    ASSERT_EQ(irr.warnings.size(), 1u);
    EXPECT_NE(irr.warnings[0].find("irrational vanishing locus not checked"), std::string::npos);

    SpecialPoints z = special_points(testing::scalar_chain(Poly(), 0, 0, 0, 0));
    EXPECT_TRUE(z.s_is_zero);
    auto pts = points_to_check(z);
    ASSERT_FALSE(pts.empty());
    EXPECT_TRUE(pts.back().is_generic());
}

TEST(ConditionII, Examples) {
    LinkedChain c = counterexample_chain();
    ConditionReport at0 = check_condition_II(c, FiberPoint::at(0));
    EXPECT_TRUE(at0.passed);

    ConditionReport zero = check_condition_II(testing::scalar_chain(Poly(), 0, 0, 0, 0), FiberPoint::at(0));
    EXPECT_FALSE(zero.passed);
    EXPECT_FALSE(zero.failures.empty());

    EXPECT_THROW(check_condition_II(c, FiberPoint::at(1)), NotASpecialPoint);
    EXPECT_THROW(check_condition_II(c, FiberPoint::generic()), NotASpecialPoint);
}

TEST(ConditionIII, Examples) {
    LinkedChain c = counterexample_chain();
    ConditionReport rep = check_condition_III(c, FiberPoint::at(0));
    EXPECT_FALSE(rep.passed);
    ASSERT_FALSE(rep.failures.empty());
    EXPECT_EQ(rep.failures[0].index, 1u);

    EXPECT_TRUE(check_condition_III(testing::scalar_chain(T, T, 1, T, 1), FiberPoint::at(0)).passed);
    EXPECT_THROW(check_condition_III(c, FiberPoint::at(2)), NotASpecialPoint);

    GenParams p;
    p.r = 2;
    p.m = 3;
    p.m1 = 1;
    p.n = 4;
    p.s = T;
    p.seed = 7;
    LinkedChain valid = gen_valid_chain(p);
    EXPECT_TRUE(check_condition_III(valid, FiberPoint::at(0)).passed);
}

TEST(ConditionReports, PassedIffNoFailures) {
    for (std::uint64_t k = 0; k < 30; ++k) {
        GenParams p = testing::sweep_params(k, 4, 4);
        LinkedChain c = k % 2 ? gen_valid_chain(p) : counterexample_chain();
        for (const auto& x : points_to_check(special_points(c))) {
            for (const auto& rep : {check_condition_II(c, x), check_condition_III(c, x)})
                EXPECT_EQ(rep.passed, rep.failures.empty());
        }
    }
}

// Seeded properties.

TEST(ChainProperty, CompositesCompose) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        GenParams p = testing::sweep_params(300 + k, 3, 5);
        LinkedChain c = gen_valid_chain(p);
        const std::size_t n = c.n();
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                for (std::size_t l = j; l <= n; ++l) {
                    for (Family f : {Family::FFwd, Family::GFwd})
                        EXPECT_EQ(composite(c, f, i, l), composite(c, f, j, l) * composite(c, f, i, j));
                    for (Family f : {Family::FBwd, Family::GBwd})
                        EXPECT_EQ(composite(c, f, i, l), composite(c, f, i, j) * composite(c, f, j, l));
                }
    }
}

TEST(ChainProperty, ConditionIGivesPowersOfS) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        LinkedChain c = gen_valid_chain(testing::sweep_params(400 + k, 3, 4));
        ASSERT_TRUE(check_condition_I(c).passed);
        for (std::size_t i = 1; i <= c.n(); ++i)
            for (std::size_t j = i; j <= c.n(); ++j) {
                const Poly sp = poly_pow(c.s(), static_cast<unsigned>(j - i));
                EXPECT_EQ(composite(c, Family::FBwd, i, j) * composite(c, Family::FFwd, i, j),
                          MatrixP::identity(c.r()) * sp);
                EXPECT_EQ(composite(c, Family::GFwd, i, j) * composite(c, Family::GBwd, i, j),
                          MatrixP::identity(c.m()) * sp);
            }
    }
}

TEST(ChainProperty, GenericPassWithZeroSHoldsAtSampledPoints) {
    std::size_t checked = 0;
    for (std::uint64_t k = 0; k < 30; ++k) {
        GenParams p = testing::sweep_params(500 + k, 4, 4);
        p.s = Poly();
        LinkedChain c = gen_valid_chain(p);
        if (!check_condition_II(c, FiberPoint::generic()).passed ||
            !check_condition_III(c, FiberPoint::generic()).passed)
            continue;
        std::size_t fails = 0;
        for (int a = -4; a <= 4; ++a) {
            const FiberPoint x = FiberPoint::at(Rational(a, 2));
            if (!check_condition_II(c, x).passed || !check_condition_III(c, x).passed) ++fails;
        }
        EXPECT_LE(fails, 2u);
        ++checked;
    }
    EXPECT_EQ(checked, 30u);
}

TEST(ChainProperty, ReportsAreDeterministic) {
    LinkedChain c = gen_valid_chain(testing::sweep_params(77, 4, 4));
    for (const auto& x : points_to_check(special_points(c))) {
        ConditionReport a = check_condition_III(c, x), b = check_condition_III(c, x);
        EXPECT_EQ(a.passed, b.passed);
        ASSERT_EQ(a.failures.size(), b.failures.size());
        for (std::size_t k = 0; k < a.failures.size(); ++k) {
            EXPECT_EQ(a.failures[k].description, b.failures[k].description);
            EXPECT_EQ(a.failures[k].witness, b.failures[k].witness);
        }
    }
}

}  // namespace
}  // namespace linkhom

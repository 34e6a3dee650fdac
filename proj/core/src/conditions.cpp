#include "linkhom/conditions.hpp"

#include <algorithm>

namespace linkhom {

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::I: return "I";
        case Condition::II: return "II";
        case Condition::III: return "III";
    }
    return "?";
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void check_identity(const MatrixP& a, const MatrixP& b, const MatrixP& s_id, const std::string& what,
                    std::size_t i, ConditionReport& rep) {
    MatrixP residual = a * b - s_id;
    if (!residual.is_zero()) rep.failures.push_back({i, what + " != s*id", residual});
}

template <FieldScalar K>
Witness as_witness(Matrix<K> m) {
    return Witness(std::move(m));
}

// Returns a column of `candidates` outside the column space of `space`.
template <FieldScalar K>
Matrix<K> outside_vector(const Matrix<K>& candidates, const Matrix<K>& space) {
    const std::size_t base = rank(space);
    for (std::size_t j = 0; j < candidates.cols(); ++j) {
        Matrix<K> v = candidates.block(0, j, candidates.rows(), 1);
        if (rank(hstack(space, v)) > base) return v;
    }
    return Matrix<K>(candidates.rows(), 0);
}

// ker(a) == im(b) inside the common space; a : V -> W, b : U -> V.
template <FieldScalar K>
void kernel_equals_image(const Matrix<K>& a, const Matrix<K>& b, const std::string& a_name,
                         const std::string& b_name, std::size_t i, ConditionReport& rep) {
    const std::size_t dim = a.cols();
    Matrix<K> ab = a * b;
    if (!ab.is_zero()) {
        rep.failures.push_back({i, "im " + b_name + " not contained in ker " + a_name, as_witness(std::move(ab))});
        return;
    }
    const std::size_t dim_ker = dim - rank(a);
    const std::size_t dim_im = rank(b);
    if (dim_ker != dim_im) {
        Matrix<K> ker = kernel_matrix(a);
        rep.failures.push_back({i,
                                "ker " + a_name + " (dim " + std::to_string(dim_ker) + ") strictly contains im " +
                                    b_name + " (dim " + std::to_string(dim_im) + ")",
                                as_witness(outside_vector(ker, b))});
    }
}

// im(a) complementary to ker(b) in the target of a = source of b.
template <FieldScalar K>
void image_complements_kernel(const Matrix<K>& a, const Matrix<K>& b, const std::string& a_name,
                              const std::string& b_name, std::size_t i, ConditionReport& rep) {
    Matrix<K> im = column_space_basis(a);
    Matrix<K> ker = kernel_matrix(b);
    Matrix<K> both = hstack(im, ker);
    const std::size_t dim = a.rows();
    const std::size_t total = rank(both);
    if (im.cols() + ker.cols() != dim || total != dim) {
        rep.failures.push_back({i,
                                "im " + a_name + " (dim " + std::to_string(im.cols()) + ") + ker " + b_name +
                                    " (dim " + std::to_string(ker.cols()) + ") spans rank " + std::to_string(total) +
                                    ", not a direct sum equal to the fiber of dimension " + std::to_string(dim),
                                as_witness(std::move(both))});
    }
}

template <FieldScalar K>
ConditionReport condition_II_in(const LinkedChain& chain, const FiberPoint& x) {
    ConditionReport rep{Condition::II, x, true, {}};
    auto maps = specialize_g<K>(chain, x);
    for (std::size_t i = 1; i < chain.n(); ++i) {
        const auto& down = maps.g_fwd[i - 1];
        const auto& up = maps.g_bwd[i - 1];
        kernel_equals_image(down, up, "g_" + idx(i), "g^" + idx(i), i, rep);
        kernel_equals_image(up, down, "g^" + idx(i), "g_" + idx(i), i, rep);
    }
    rep.passed = rep.failures.empty();
    return rep;
}

template <FieldScalar K>
ConditionReport condition_III_in(const LinkedChain& chain, const FiberPoint& x) {
    ConditionReport rep{Condition::III, x, true, {}};
    if (chain.n() <= 2) return rep;
    auto maps = specialize_g<K>(chain, x);
    for (std::size_t i = 1; i + 1 < chain.n(); ++i) {
        image_complements_kernel(maps.g_fwd[i - 1], maps.g_fwd[i], "g_" + idx(i), "g_" + idx(i + 1), i, rep);
        image_complements_kernel(maps.g_bwd[i], maps.g_bwd[i - 1], "g^" + idx(i + 1), "g^" + idx(i), i, rep);
    }
    rep.passed = rep.failures.empty();
    return rep;
}

void require_special(const LinkedChain& chain, const FiberPoint& x) {
    if (!x.vanishes(chain.s())) throw NotASpecialPoint(x.to_string());
}

}  // namespace

ConditionReport check_condition_I(const LinkedChain& chain) {
    ConditionReport rep{Condition::I, std::nullopt, true, {}};
    const MatrixP s_r = MatrixP::identity(chain.r()) * chain.s();
    const MatrixP s_m = MatrixP::identity(chain.m()) * chain.s();
    for (std::size_t i = 1; i < chain.n(); ++i) {
        check_identity(chain.f(i), chain.f_up(i), s_r, "f_" + idx(i) + " f^" + idx(i), i, rep);
        check_identity(chain.f_up(i), chain.f(i), s_r, "f^" + idx(i) + " f_" + idx(i), i, rep);
        check_identity(chain.g(i), chain.g_up(i), s_m, "g_" + idx(i) + " g^" + idx(i), i, rep);
        check_identity(chain.g_up(i), chain.g(i), s_m, "g^" + idx(i) + " g_" + idx(i), i, rep);
    }
    rep.passed = rep.failures.empty();
    return rep;
}

SpecialPoints special_points(const LinkedChain& chain) {
    SpecialPoints sp;
    if (chain.s().is_zero()) {
        sp.s_is_zero = true;
        return sp;
    }
    auto split = rational_roots(chain.s());
    for (const auto& [root, mult] : split.roots) sp.roots.push_back(root);
    if (split.search_truncated)
        sp.warnings.push_back("rational root search abandoned (coefficients too large); special points not checked");
    else if (split.cofactor.degree() >= 1)
        sp.warnings.push_back("irrational vanishing locus not checked (factor " + split.cofactor.to_string() + ")");
    return sp;
}

std::vector<FiberPoint> points_to_check(const SpecialPoints& sp) {
    std::vector<FiberPoint> pts;
    if (sp.s_is_zero) {
        for (long a : {-1L, 0L, 1L, 2L}) pts.push_back(FiberPoint::at(Rational(a)));
        pts.push_back(FiberPoint::at(Rational(1, 2)));
        std::sort(pts.begin(), pts.end());
        pts.push_back(FiberPoint::generic());
        return pts;
    }
    for (const auto& a : sp.roots) pts.push_back(FiberPoint::at(a));
    return pts;
}

ConditionReport check_condition_II(const LinkedChain& chain, const FiberPoint& x) {
    require_special(chain, x);
    return with_residue_field(x, [&](auto tag) { return condition_II_in<decltype(tag)>(chain, x); });
}

ConditionReport check_condition_III(const LinkedChain& chain, const FiberPoint& x) {
    require_special(chain, x);
    return with_residue_field(x, [&](auto tag) { return condition_III_in<decltype(tag)>(chain, x); });
}

}  // namespace linkhom

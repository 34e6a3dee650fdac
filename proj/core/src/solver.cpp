#include "linkhom/solver.hpp"

#include <algorithm>

#include "linkhom/snf.hpp"

namespace linkhom {

MatrixP constraint_matrix(const LinkedChain& chain) {
    const std::size_t r = chain.r(), m = chain.m(), n = chain.n(), rm = chain.rm();
    MatrixP out(2 * (n - 1) * rm, n * rm);

    // Adds sign * (A^T (x) id_m) at (row0, col0); A is r x r.
    auto put_right = [&](std::size_t row0, std::size_t col0, const MatrixP& a, bool negate) {
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t c2 = 0; c2 < r; ++c2) {
                const Poly& x = a(c2, c);
                if (x.is_zero()) continue;
                for (std::size_t k = 0; k < m; ++k)
                    out(row0 + c * m + k, col0 + c2 * m + k) += negate ? -x : x;
            }
    };
    // Adds sign * (id_r (x) G) at (row0, col0); G is m x m.
    auto put_left = [&](std::size_t row0, std::size_t col0, const MatrixP& g, bool negate) {
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    const Poly& x = g(a, b);
                    if (x.is_zero()) continue;
                    out(row0 + c * m + a, col0 + c * m + b) += negate ? -x : x;
                }
    };

    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t row_a = 2 * (i - 1) * rm;
        const std::size_t row_b = row_a + rm;
        const std::size_t col_i = (i - 1) * rm;
        const std::size_t col_next = i * rm;
        put_right(row_a, col_next, chain.f(i), false);
        put_left(row_a, col_i, chain.g(i), true);
        put_right(row_b, col_i, chain.f_up(i), false);
        put_left(row_b, col_next, chain.g_up(i), true);
    }
    return out;
}

std::size_t fiber_dimension(const MatrixP& constraints, const FiberPoint& x) {
    return with_residue_field(x, [&](auto tag) -> std::size_t {
        using K = decltype(tag);
        return constraints.cols() - rank(specialize<K>(constraints, x));
    });
}

std::size_t fiber_dimension(const LinkedChain& chain, const FiberPoint& x) {
    return fiber_dimension(constraint_matrix(chain), x);
}

std::optional<std::size_t> SolveReport::dim_at(const FiberPoint& x) const {
    for (const auto& [p, d] : fiber_dims)
        if (p == x) return d;
    return std::nullopt;
}

SolveReport vector_bundle_check(const LinkedChain& chain, const SolveOptions& opts) {
    SolveReport rep;
    rep.rm = chain.rm();
    const MatrixP cm = constraint_matrix(chain);
    rep.generic_dim = fiber_dimension(cm, FiberPoint::generic());

    SpecialPoints sp = special_points(chain);
    rep.warnings = sp.warnings;
    std::vector<FiberPoint> pts = points_to_check(sp);
    for (const auto& a : opts.extra_points) pts.push_back(FiberPoint::at(a));
    pts.push_back(FiberPoint::generic());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    rep.is_vector_bundle = rep.generic_dim == rep.rm;
    for (const auto& x : pts) {
        std::size_t d = x.is_generic() ? rep.generic_dim : fiber_dimension(cm, x);
        rep.fiber_dims.emplace_back(x, d);
        if (d != rep.rm) rep.is_vector_bundle = false;
        if (d > rep.generic_dim) {
            rep.flatness_failure = true;
            rep.jump_points.push_back(x);
        }
    }

    if (opts.want_basis) {
        std::vector<LinkedHomTuple<Poly>> basis;
        for (const auto& v : kernel_basis_pid(cm)) basis.push_back(unvectorize(v, chain.r(), chain.m(), chain.n()));
        rep.kernel_basis = std::move(basis);
    }
    return rep;
}

namespace {

template <class T, class Conv>
LinkageResult<T> linkage_in(const LinkedChain& chain, const LinkedHomTuple<T>& tuple, Conv&& conv) {
    if (tuple.phis.size() != chain.n())
        throw ShapeMismatch("phis", 0, std::to_string(chain.n()) + " matrices", std::to_string(tuple.phis.size()));
    for (std::size_t i = 0; i < tuple.phis.size(); ++i)
        if (tuple.phis[i].rows() != chain.m() || tuple.phis[i].cols() != chain.r())
            throw ShapeMismatch("phis", i, std::to_string(chain.m()) + "x" + std::to_string(chain.r()),
                                tuple.phis[i].shape_string());
    LinkageResult<T> out;
    for (std::size_t i = 1; i < chain.n(); ++i) {
        const auto& phi = tuple.phis[i - 1];
        const auto& next = tuple.phis[i];
        Matrix<T> ra = next * conv(chain.f(i)) - conv(chain.g(i)) * phi;
        Matrix<T> rb = phi * conv(chain.f_up(i)) - conv(chain.g_up(i)) * next;
        if (!ra.is_zero()) out.residuals.push_back({i, 'a', std::move(ra)});
        if (!rb.is_zero()) out.residuals.push_back({i, 'b', std::move(rb)});
    }
    out.ok = out.residuals.empty();
    return out;
}

}  // namespace

LinkageResult<Poly> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<Poly>& tuple) {
    return linkage_in(chain, tuple, [](const MatrixP& m) -> const MatrixP& { return m; });
}

LinkageResult<RatFunc> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<RatFunc>& tuple) {
    return linkage_in(chain, tuple, [](const MatrixP& m) { return to_ratfunc(m); });
}

LinkageResult<Rational> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<Rational>& tuple,
                                       const Rational& a) {
    return linkage_in(chain, tuple, [&](const MatrixP& m) { return eval_at(m, a); });
}

}  // namespace linkhom

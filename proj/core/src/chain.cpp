#include "linkhom/chain.hpp"

namespace linkhom {

std::string family_name(Family f) {
    switch (f) {
        case Family::FFwd: return "f_fwd";
        case Family::FBwd: return "f_bwd";
        case Family::GFwd: return "g_fwd";
        case Family::GBwd: return "g_bwd";
    }
    return "?";
}

const std::vector<MatrixP>& LinkedChain::family(Family f) const {
    switch (f) {
        case Family::FFwd: return f_fwd_;
        case Family::FBwd: return f_bwd_;
        case Family::GFwd: return g_fwd_;
        case Family::GBwd: return g_bwd_;
    }
    return f_fwd_;
}

ChainSpec LinkedChain::to_spec() const {
    return ChainSpec{static_cast<long>(r_), static_cast<long>(m_), static_cast<long>(n_), s_, f_fwd_, f_bwd_, g_fwd_,
                     g_bwd_};
}

namespace {

void check_list(const std::vector<MatrixP>& list, const std::string& name, std::size_t len, std::size_t dim) {
    if (list.size() != len)
        throw ShapeMismatch(name, list.size(), std::to_string(len) + " matrices", std::to_string(list.size()));
    const std::string want = std::to_string(dim) + "x" + std::to_string(dim);
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k].rows() != dim || list[k].cols() != dim) throw ShapeMismatch(name, k, want, list[k].shape_string());
}

}  // namespace

LinkedChain build_chain(ChainSpec spec) {
    if (spec.r <= 0) throw ShapeMismatch("r", 0, "positive integer", std::to_string(spec.r));
    if (spec.m <= 0) throw ShapeMismatch("m", 0, "positive integer", std::to_string(spec.m));
    if (spec.n <= 0) throw ShapeMismatch("n", 0, "positive integer", std::to_string(spec.n));
    const auto r = static_cast<std::size_t>(spec.r);
    const auto m = static_cast<std::size_t>(spec.m);
    const auto n = static_cast<std::size_t>(spec.n);
    check_list(spec.f_fwd, "f_fwd", n - 1, r);
    check_list(spec.f_bwd, "f_bwd", n - 1, r);
    check_list(spec.g_fwd, "g_fwd", n - 1, m);
    check_list(spec.g_bwd, "g_bwd", n - 1, m);
    LinkedChain c;
    c.r_ = r;
    c.m_ = m;
    c.n_ = n;
    c.s_ = std::move(spec.s);
    c.f_fwd_ = std::move(spec.f_fwd);
    c.f_bwd_ = std::move(spec.f_bwd);
    c.g_fwd_ = std::move(spec.g_fwd);
    c.g_bwd_ = std::move(spec.g_bwd);
    return c;
}

MatrixP composite(const LinkedChain& chain, Family family, std::size_t i, std::size_t j) {
    if (i < 1 || i > j || j > chain.n())
        throw IndexOutOfRange("composite(" + family_name(family) + ", " + std::to_string(i) + ", " +
                              std::to_string(j) + ") with n = " + std::to_string(chain.n()));
    const std::size_t dim = (family == Family::FFwd || family == Family::FBwd) ? chain.r() : chain.m();
    const auto& maps = chain.family(family);
    MatrixP acc = MatrixP::identity(dim);
    const bool forward = family == Family::FFwd || family == Family::GFwd;
    for (std::size_t k = i; k < j; ++k) {
        // forward: acc <- map_k * acc; backward: acc <- acc * map^k
        acc = forward ? maps[k - 1] * acc : acc * maps[k - 1];
    }
    return acc;
}

LinkedChain counterexample_chain() {
    const Poly t = Poly::t();
    const Poly s = t * t;
    const Poly one(Rational(1));
    ChainSpec spec;
    spec.r = 1;
    spec.m = 3;
    spec.n = 3;
    spec.s = s;
    spec.f_fwd = {MatrixP{{t}}, MatrixP{{t}}};
    spec.f_bwd = {MatrixP{{t}}, MatrixP{{t}}};
    spec.g_fwd = {MatrixP::diagonal({one, s, s}), MatrixP::diagonal({one, one, s})};
    spec.g_bwd = {MatrixP::diagonal({s, one, one}), MatrixP::diagonal({s, s, one})};
    return build_chain(std::move(spec));
}

}  // namespace linkhom

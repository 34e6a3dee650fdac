#include "linkhom/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "linkhom/linalg.hpp"

namespace linkhom {

long Prng::uniform(long lo, long hi) {
    if (hi < lo) throw Error("empty range in Prng::uniform");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rational Prng::rational(long bound) {
    long num = uniform(-bound, bound);
    long den = uniform(1, bound);
    return Rational(num, den);
}

Rational Prng::nonzero_rational(long bound) {
    for (;;) {
        Rational q = rational(bound);
        if (!q.is_zero()) return q;
    }
}

Poly Prng::poly(int max_degree, long bound) {
    std::vector<Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c) x = Rational(uniform(-bound, bound));
    return Poly(std::move(c));
}

namespace {

MatrixQ random_invertible(std::size_t k, long bound, Prng& rng) {
    if (k == 0) return MatrixQ(0, 0);
    for (;;) {
        MatrixQ a(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a(i, j) = rng.rational(bound);
        if (is_invertible(a)) return a;
    }
}

MatrixP block_diag(const MatrixP& a, const MatrixP& b) {
    MatrixP m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// One pair of linked maps from the block model on a split k + (dim - k).
struct LinkedPair {
    MatrixP fwd, bwd;
};

LinkedPair block_model_pair(std::size_t dim, std::size_t k, const Poly& s, long bound, Prng& rng) {
    MatrixQ a = random_invertible(k, bound, rng);
    MatrixQ b = random_invertible(dim - k, bound, rng);
    MatrixP ap = to_poly(a), bp = to_poly(b);
    MatrixP a_inv = to_poly(inverse_field(a)), b_inv = to_poly(inverse_field(b));
    return {block_diag(ap, bp * s), block_diag(a_inv * s, b_inv)};
}

// Unimodular P together with its inverse: a permutation followed by elementary
// operations id + c(t) e_{ab}, c of degree <= 2.
struct Conjugator {
    MatrixP p, p_inv;
};

Conjugator random_conjugator(std::size_t dim, int ops, long bound, Prng& rng) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = dim; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
    MatrixP p(dim, dim), p_inv(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        p(i, perm[i]) = Poly(Rational(1));
        p_inv(perm[i], i) = Poly(Rational(1));
    }
    if (dim < 2) return {p, p_inv};
    for (int k = 0; k < ops; ++k) {
        auto a = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
        auto b = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 2));
        if (b >= a) ++b;
        int deg = static_cast<int>(rng.uniform(0, 2));
        Poly c = rng.poly(deg, std::min(bound, 2L));
        if (c.is_zero()) continue;
        MatrixP e = MatrixP::identity(dim), e_inv = MatrixP::identity(dim);
        e(a, b) = c;
        e_inv(a, b) = -c;
        p = p * e;
        p_inv = e_inv * p_inv;
    }
    return {p, p_inv};
}

void conjugate_family(std::vector<MatrixP>& fwd, std::vector<MatrixP>& bwd, const std::vector<Conjugator>& c) {
    for (std::size_t i = 0; i < fwd.size(); ++i) {
        fwd[i] = c[i + 1].p * fwd[i] * c[i].p_inv;
        bwd[i] = c[i].p * bwd[i] * c[i + 1].p_inv;
    }
}

ChainSpec base_spec(const GenParams& p) {
    if (p.r <= 0 || p.m <= 0 || p.n <= 0) throw Infeasible("r, m, n must be positive");
    if (p.m1 < 0 || p.m1 > p.m) throw Infeasible("m1 must lie in [0, m]");
    if (p.entry_bound <= 0) throw Infeasible("entry_bound must be positive");
    ChainSpec spec;
    spec.r = p.r;
    spec.m = p.m;
    spec.n = p.n;
    spec.s = p.s;
    return spec;
}

void fill_block_model_f(ChainSpec& spec, const GenParams& p, Prng& rng) {
    const auto r = static_cast<std::size_t>(p.r);
    const auto r1 = static_cast<std::size_t>(rng.uniform(0, p.r));
    for (long i = 1; i < p.n; ++i) {
        auto pair = block_model_pair(r, r1, p.s, p.entry_bound, rng);
        spec.f_fwd.push_back(std::move(pair.fwd));
        spec.f_bwd.push_back(std::move(pair.bwd));
    }
}

void maybe_conjugate(ChainSpec& spec, const GenParams& p, Prng& rng) {
    if (!p.conjugate) return;
    std::vector<Conjugator> pg, qf;
    for (long i = 0; i < p.n; ++i)
        pg.push_back(random_conjugator(static_cast<std::size_t>(p.m), p.conjugator_ops, p.entry_bound, rng));
    for (long i = 0; i < p.n; ++i)
        qf.push_back(random_conjugator(static_cast<std::size_t>(p.r), p.conjugator_ops, p.entry_bound, rng));
    conjugate_family(spec.g_fwd, spec.g_bwd, pg);
    conjugate_family(spec.f_fwd, spec.f_bwd, qf);
}

ChainSpec valid_spec(const GenParams& p, Prng& rng) {
    ChainSpec spec = base_spec(p);
    const auto m = static_cast<std::size_t>(p.m);
    const auto m1 = static_cast<std::size_t>(p.m1);
    for (long i = 1; i < p.n; ++i) {
        auto pair = block_model_pair(m, m1, p.s, p.entry_bound, rng);
        spec.g_fwd.push_back(std::move(pair.fwd));
        spec.g_bwd.push_back(std::move(pair.bwd));
    }
    fill_block_model_f(spec, p, rng);
    maybe_conjugate(spec, p, rng);
    return spec;
}

// A rational point where s vanishes (nullopt when s = 0 or there is none).
struct SpecialChoice {
    bool exists = false;
    std::optional<Rational> root;
};

SpecialChoice pick_special_point(const Poly& s, Prng& rng) {
    if (s.is_zero()) return {true, std::nullopt};
    auto split = rational_roots(s);
    if (split.roots.empty()) return {false, std::nullopt};
    auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(split.roots.size()) - 1));
    return {true, split.roots[k].first};
}

// Random subset of {0..dim-1} of the given size, ascending.
std::vector<std::size_t> random_subset(std::size_t dim, std::size_t size, Prng& rng) {
    std::vector<std::size_t> all(dim);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i)
        std::swap(all[i], all[static_cast<std::size_t>(rng.uniform(static_cast<long>(i), static_cast<long>(dim) - 1))]);
    std::vector<std::size_t> out(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(out.begin(), out.end());
    return out;
}

ChainSpec broken_II_spec(const GenParams& p, Prng& rng) {
    if (p.n < 2) throw Infeasible("breaking condition II needs n >= 2");
    SpecialChoice sp = pick_special_point(p.s, rng);
    if (!sp.exists) throw Infeasible("breaking condition II needs a rational point where s vanishes, or s = 0");
    ChainSpec spec = base_spec(p);
    const auto m = static_cast<std::size_t>(p.m);
    auto forward_coords = random_subset(m, static_cast<std::size_t>(p.m1), rng);
    std::vector<bool> forward(m, false);
    for (auto c : forward_coords) forward[c] = true;

    const long k = rng.uniform(1, p.n - 1);
    const auto j = static_cast<std::size_t>(rng.uniform(0, p.m - 1));
    for (long i = 1; i < p.n; ++i) {
        std::vector<Poly> down(m), up(m);
        for (std::size_t c = 0; c < m; ++c) {
            Rational alpha = rng.nonzero_rational(p.entry_bound);
            if (forward[c]) {
                down[c] = Poly(alpha);
                up[c] = p.s * alpha.inverse();
            } else {
                down[c] = p.s * alpha;
                up[c] = Poly(alpha.inverse());
            }
        }
        if (i == k) {
            if (!sp.root) {
                down[j] = Poly();
                up[j] = Poly();
            } else {
                Rational c = rng.nonzero_rational(p.entry_bound);
                Poly lin{-*sp.root, Rational(1)};
                Poly q = exact_div(p.s, lin);
                down[j] = lin * c;
                // With a repeated root both factors vanish and (I) survives.
                up[j] = q.eval(*sp.root).is_zero() ? q * c.inverse() : p.s * c.inverse();
            }
        }
        spec.g_fwd.push_back(MatrixP::diagonal(down));
        spec.g_bwd.push_back(MatrixP::diagonal(up));
    }
    fill_block_model_f(spec, p, rng);
    maybe_conjugate(spec, p, rng);
    return spec;
}

ChainSpec broken_III_spec(const GenParams& p, Prng& rng) {
    if (p.n < 3 || p.m < 3) throw Infeasible("breaking condition III needs n >= 3 and m >= 3");
    SpecialChoice sp = pick_special_point(p.s, rng);
    if (!sp.exists) throw Infeasible("breaking condition III needs a rational point where s vanishes, or s = 0");
    ChainSpec spec = base_spec(p);
    const auto m = static_cast<std::size_t>(p.m);
    auto triple = random_subset(m, 3, rng);
    const long k = rng.uniform(1, p.n - 2);
    std::vector<int> role(m, -1);  // -1: other, 0..2: position in the triple
    for (std::size_t q = 0; q < 3; ++q) role[triple[q]] = static_cast<int>(q);
    std::vector<bool> forward(m, false);
    for (std::size_t c = 0; c < m; ++c)
        if (role[c] < 0) forward[c] = rng.uniform(0, 1) == 1;

    const Poly one(Rational(1));
    for (long i = 1; i < p.n; ++i) {
        std::vector<Poly> down(m), up(m);
        for (std::size_t c = 0; c < m; ++c) {
            bool fwd_unit;
            if (role[c] == 0)
                fwd_unit = true;
            else if (role[c] == 1)
                fwd_unit = i > k;
            else if (role[c] == 2)
                fwd_unit = false;
            else
                fwd_unit = forward[c];
            down[c] = fwd_unit ? one : p.s;
            up[c] = fwd_unit ? p.s : one;
        }
        spec.g_fwd.push_back(MatrixP::diagonal(down));
        spec.g_bwd.push_back(MatrixP::diagonal(up));
    }
    Poly root;
    if (exact_square_root(p.s, root) && !root.is_zero()) {
        MatrixP h = MatrixP::identity(static_cast<std::size_t>(p.r)) * root;
        for (long i = 1; i < p.n; ++i) {
            spec.f_fwd.push_back(h);
            spec.f_bwd.push_back(h);
        }
    } else {
        fill_block_model_f(spec, p, rng);
    }
    maybe_conjugate(spec, p, rng);
    return spec;
}

ChainSpec broken_I_spec(const GenParams& p, Prng& rng) {
    if (p.n < 2) throw Infeasible("breaking condition I needs n >= 2");
    if (p.s.is_zero()) throw Infeasible("breaking condition I by a unit factor needs s != 0");
    ChainSpec spec = valid_spec(p, rng);
    const long k = rng.uniform(1, p.n - 1);
    Rational c;
    do {
        c = rng.nonzero_rational(p.entry_bound);
    } while (c.is_one());
    spec.f_bwd[static_cast<std::size_t>(k - 1)] *= Poly(c);
    return spec;
}

}  // namespace

LinkedChain gen_valid_chain(const GenParams& params) {
    Prng rng(params.seed);
    return build_chain(valid_spec(params, rng));
}

LinkedChain gen_broken_chain(const GenParams& params, Condition target) {
    Prng rng(params.seed);
    switch (target) {
        case Condition::I: return build_chain(broken_I_spec(params, rng));
        case Condition::II: return build_chain(broken_II_spec(params, rng));
        case Condition::III: return build_chain(broken_III_spec(params, rng));
    }
    throw Infeasible("unknown target");
}

std::pair<MatrixQ, MatrixQ> gen_hom_pair(std::size_t m1, std::size_t m2, std::size_t r, long entry_bound,
                                         std::uint64_t seed) {
    Prng rng(seed);
    MatrixQ dblprime(m2, r), prime(m1, r);
    for (std::size_t i = 0; i < m2; ++i)
        for (std::size_t j = 0; j < r; ++j) dblprime(i, j) = rng.rational(entry_bound);
    for (std::size_t i = 0; i < m1; ++i)
        for (std::size_t j = 0; j < r; ++j) prime(i, j) = rng.rational(entry_bound);
    return {std::move(dblprime), std::move(prime)};
}

MatrixP random_poly_matrix(std::size_t rows, std::size_t cols, int max_degree, long entry_bound, Prng& rng) {
    MatrixP m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng.uniform(0, 3) == 0) continue;
            m(i, j) = rng.poly(static_cast<int>(rng.uniform(0, max_degree)), entry_bound);
        }
    return m;
}

}  // namespace linkhom

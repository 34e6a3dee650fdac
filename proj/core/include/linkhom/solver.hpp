#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/chain.hpp"
#include "linkhom/conditions.hpp"

namespace linkhom {

/// Tuple (phi_1, ..., phi_n) of m x r matrices over T.
template <class T>
struct LinkedHomTuple {
    std::vector<Matrix<T>> phis;
    friend bool operator==(const LinkedHomTuple&, const LinkedHomTuple&) = default;
};

/// Column-stacked concatenation vec(phi_1) ... vec(phi_n).
template <class T>
std::vector<T> vectorize(const LinkedHomTuple<T>& tuple) {
    std::vector<T> v;
    for (const auto& phi : tuple.phis)
        for (std::size_t c = 0; c < phi.cols(); ++c)
            for (std::size_t a = 0; a < phi.rows(); ++a) v.push_back(phi(a, c));
    return v;
}

template <class T>
LinkedHomTuple<T> unvectorize(const std::vector<T>& v, std::size_t r, std::size_t m, std::size_t n) {
    if (v.size() != r * m * n)
        throw ShapeMismatch("tuple vector", 0, std::to_string(r * m * n) + " entries", std::to_string(v.size()));
    LinkedHomTuple<T> t;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix<T> phi(m, r);
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t a = 0; a < m; ++a) phi(a, c) = v[k++];
        t.phis.push_back(std::move(phi));
    }
    return t;
}

/// The 2(n-1)rm x n*rm matrix over Q[t] whose kernel is the module of linked
/// homomorphisms, for the unknown vec(phi_1) ... vec(phi_n). For each
/// i = 1..n-1 it has two row blocks, in this order:
///   (a) (f_i^T (x) id_m) vec(phi_{i+1}) - (id_r (x) g_i) vec(phi_i)
///   (b) ((f^i)^T (x) id_m) vec(phi_i) - (id_r (x) g^i) vec(phi_{i+1})
MatrixP constraint_matrix(const LinkedChain& chain);

/// dim over the residue field of the kernel of the specialized constraint matrix.
std::size_t fiber_dimension(const LinkedChain& chain, const FiberPoint& x);
std::size_t fiber_dimension(const MatrixP& constraints, const FiberPoint& x);

struct SolveOptions {
    std::vector<Rational> extra_points;
    bool want_basis = false;
};

struct SolveReport {
    std::size_t rm = 0;
    std::size_t generic_dim = 0;
    /// Every checked point in FiberPoint order; the generic point is last.
    std::vector<std::pair<FiberPoint, std::size_t>> fiber_dims;
    bool is_vector_bundle = false;
    /// Some fiber has dimension above the generic one.
    bool flatness_failure = false;
    std::vector<FiberPoint> jump_points;
    std::vector<std::string> warnings;
    /// Free Q[t]-basis of the solution module, when requested.
    std::optional<std::vector<LinkedHomTuple<Poly>>> kernel_basis;

    std::optional<std::size_t> dim_at(const FiberPoint& x) const;
};

/// Fiber dimensions at the generic point, every rational root of s, the
/// sample points used when s = 0, and any extra points; the verdict is
/// "vector bundle of rank rm" exactly when all of them equal rm.
SolveReport vector_bundle_check(const LinkedChain& chain, const SolveOptions& opts = {});

/// Residual of one linkage identity: family 'a' is phi_{i+1} f_i - g_i phi_i,
/// family 'b' is phi_i f^i - g^i phi_{i+1}.
template <class T>
struct LinkageResidual {
    std::size_t index;
    char family;
    Matrix<T> residual;
};

template <class T>
struct LinkageResult {
    bool ok = true;
    std::vector<LinkageResidual<T>> residuals;
};

/// Exact check of phi_{i+1} f_i = g_i phi_i and phi_i f^i = g^i phi_{i+1}.
LinkageResult<Poly> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<Poly>& tuple);
LinkageResult<RatFunc> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<RatFunc>& tuple);
/// Same, for a tuple over Q living in the fiber at t = a.
LinkageResult<Rational> verify_linkage(const LinkedChain& chain, const LinkedHomTuple<Rational>& tuple,
                                       const Rational& a);

}  // namespace linkhom

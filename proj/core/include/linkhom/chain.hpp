#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "linkhom/fiber.hpp"
#include "linkhom/matrix.hpp"

namespace linkhom {

/// Unvalidated chain data, as read from a file or produced by a generator.
struct ChainSpec {
    long r = 0;
    long m = 0;
    long n = 0;
    Poly s;
    std::vector<MatrixP> f_fwd;  // f_i : F_i -> F_{i+1}
    std::vector<MatrixP> f_bwd;  // f^i : F_{i+1} -> F_i
    std::vector<MatrixP> g_fwd;  // g_i : G_i -> G_{i+1}
    std::vector<MatrixP> g_bwd;  // g^i : G_{i+1} -> G_i
};

enum class Family { FFwd, FBwd, GFwd, GBwd };
std::string family_name(Family f);

/// Two chains of free Q[t]-modules F_1..F_n (rank r) and G_1..G_n (rank m)
/// with maps in both directions between neighbours, in fixed bases.
///
/// Chain positions are numbered 1..n throughout the public API, and map
/// index i always refers to the maps between positions i and i+1.
class LinkedChain {
   public:
    std::size_t r() const noexcept { return r_; }
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t rm() const noexcept { return r_ * m_; }
    const Poly& s() const noexcept { return s_; }

    const std::vector<MatrixP>& f_fwd() const noexcept { return f_fwd_; }
    const std::vector<MatrixP>& f_bwd() const noexcept { return f_bwd_; }
    const std::vector<MatrixP>& g_fwd() const noexcept { return g_fwd_; }
    const std::vector<MatrixP>& g_bwd() const noexcept { return g_bwd_; }
    const std::vector<MatrixP>& family(Family f) const;

    /// Map with 1-based index i (1 <= i <= n-1).
    const MatrixP& f(std::size_t i) const { return f_fwd_.at(i - 1); }
    const MatrixP& f_up(std::size_t i) const { return f_bwd_.at(i - 1); }
    const MatrixP& g(std::size_t i) const { return g_fwd_.at(i - 1); }
    const MatrixP& g_up(std::size_t i) const { return g_bwd_.at(i - 1); }

    ChainSpec to_spec() const;

    friend bool operator==(const LinkedChain&, const LinkedChain&) = default;

   private:
    friend LinkedChain build_chain(ChainSpec spec);
    LinkedChain() = default;

    std::size_t r_ = 0, m_ = 0, n_ = 0;
    Poly s_;
    std::vector<MatrixP> f_fwd_, f_bwd_, g_fwd_, g_bwd_;
};

/// Validates all list lengths and matrix shapes. Throws ShapeMismatch naming
/// the offending list, its 0-based index, and the expected/actual shapes.
LinkedChain build_chain(ChainSpec spec);

/// Composite of consecutive maps between positions i <= j (1-based):
/// forward families give the map position i -> position j
/// (f_{j-1} ... f_i), backward families the map position j -> position i
/// (f^i ... f^{j-1}). The identity when i = j.
MatrixP composite(const LinkedChain& chain, Family family, std::size_t i, std::size_t j);

/// The g-maps of a chain specialized to the residue field of a point.
template <FieldScalar K>
struct FiberMaps {
    std::vector<Matrix<K>> g_fwd;
    std::vector<Matrix<K>> g_bwd;
};

template <FieldScalar K>
FiberMaps<K> specialize_g(const LinkedChain& chain, const FiberPoint& x) {
    FiberMaps<K> out;
    for (const auto& g : chain.g_fwd()) out.g_fwd.push_back(specialize<K>(g, x));
    for (const auto& g : chain.g_bwd()) out.g_bwd.push_back(specialize<K>(g, x));
    return out;
}

/// The chain of the counterexample: r = 1, m = 3, n = 3, s = t^2,
/// f_i = f^i = t, g_1 = diag(1, s, s), g^1 = diag(s, 1, 1),
/// g_2 = diag(1, 1, s), g^2 = diag(s, s, 1). Satisfies (I) and (II) but
/// not (III), and its linked Hom space jumps from dimension 3 to 4 at t = 0.
LinkedChain counterexample_chain();

}  // namespace linkhom

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "linkhom/chain.hpp"
#include "linkhom/conditions.hpp"

namespace linkhom {

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; integer ranges are mapped with
/// rejection sampling (not std::uniform_int_distribution, whose algorithm is
/// implementation-defined), so streams agree across platforms.
class Prng {
   public:
    explicit Prng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// Numerator uniform in [-bound, bound], denominator uniform in [1, bound].
    Rational rational(long bound);
    Rational nonzero_rational(long bound);
    /// Polynomial of degree <= max_degree with integer coefficients in [-bound, bound].
    Poly poly(int max_degree, long bound);

   private:
    std::mt19937_64 engine_;
};

struct GenParams {
    long r = 1;
    long m = 1;
    long n = 2;
    long m1 = 0;  // rank of the forward-invertible block of every G_i
    Poly s;
    long entry_bound = 3;
    std::uint64_t seed = 0;
    /// Conjugate the block model by random unimodular changes of basis.
    bool conjugate = true;
    /// Elementary operations per conjugator; their entries have degree <= 2.
    int conjugator_ops = 2;
};

/// A chain satisfying (I)-(III) everywhere: the block model
///   g_i = diag(A_i, s B_i),  g^i = diag(s A_i^-1, B_i^-1)
/// with A_i in GL_m1(Q), B_i in GL_{m-m1}(Q), likewise for f with a random
/// split of r, then conjugated by unimodular P_i (for g) and Q_i (for f):
///   g_i <- P_{i+1} g_i P_i^-1,  g^i <- P_i g^i P_{i+1}^-1.
LinkedChain gen_valid_chain(const GenParams& params);

/// A chain violating the target condition.
///  - I:  a valid chain with one f^i scaled by a unit c != 1 (needs n >= 2, s != 0).
///  - II: a diagonal model in which one coordinate of some g_i and g^i both
///        vanish at a special point, so ker g_i strictly contains im g^i
///        (needs n >= 2 and a rational special point or s = 0).
///  - III: the counterexample pattern diag(1,s,s) / diag(1,1,s) placed on
///        three random coordinates (needs n >= 3, m >= 3 and a special point).
/// Throws Infeasible when the parameters cannot produce the violation.
LinkedChain gen_broken_chain(const GenParams& params, Condition target);

/// Random inputs for reconstruction: (phi_1'' of shape m2 x r, phi_n' of shape m1 x r).
std::pair<MatrixQ, MatrixQ> gen_hom_pair(std::size_t m1, std::size_t m2, std::size_t r, long entry_bound,
                                         std::uint64_t seed);

/// Random polynomial matrix with entries of degree <= max_degree; a fraction
/// of entries is zero and the rank is not controlled.
MatrixP random_poly_matrix(std::size_t rows, std::size_t cols, int max_degree, long entry_bound, Prng& rng);

}  // namespace linkhom

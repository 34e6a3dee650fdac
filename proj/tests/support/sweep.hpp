#pragma once

#include <cstdint>
#include <vector>

#include "linkhom/generator.hpp"

namespace linkhom::testing {

inline const std::vector<Poly>& s_choices() {
    static const std::vector<Poly> v{
        Poly{1},
        Poly::t(),
        Poly::monomial(Rational(1), 2),
        Poly::monomial(Rational(1), 3),
        Poly{0, -1, 1},  // t(t-1)
        Poly(),
    };
    return v;
}

// Parameters for the k-th chain of a sweep. r and s cycle deterministically so
// every value is hit; m, m1, n are drawn from the seeded stream.
inline GenParams sweep_params(std::uint64_t k, long max_m = 5, long max_n = 5) {
    Prng rng(0x9e3779b97f4a7c15ULL ^ k);
    GenParams p;
    p.r = 1 + static_cast<long>(k % 3);
    p.s = s_choices()[(k / 3) % s_choices().size()];
    p.m = rng.uniform(1, max_m);
    p.m1 = rng.uniform(0, p.m);
    p.n = rng.uniform(1, max_n);
    p.seed = k;
    return p;
}

}  // namespace linkhom::testing

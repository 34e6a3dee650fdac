#pragma once

#include <vector>

#include "linkhom/chain.hpp"
#include "linkhom/poly.hpp"

namespace linkhom::testing {

inline Poly tp(int k) { return Poly::monomial(Rational(1), k); }

inline const Poly T = Poly::t();

inline MatrixP diagp(const std::vector<Poly>& d) { return MatrixP::diagonal(d); }

// Chain with every map equal to the identity and s = 1.
inline LinkedChain identity_chain(long r, long m, long n) {
    ChainSpec spec;
    spec.r = r;
    spec.m = m;
    spec.n = n;
    spec.s = Poly{1};
    for (long i = 0; i + 1 < n; ++i) {
        spec.f_fwd.push_back(MatrixP::identity(r));
        spec.f_bwd.push_back(MatrixP::identity(r));
        spec.g_fwd.push_back(MatrixP::identity(m));
        spec.g_bwd.push_back(MatrixP::identity(m));
    }
    return build_chain(spec);
}

// r = m = 1, n = 2 with scalar maps.
inline LinkedChain scalar_chain(const Poly& s, const Poly& f, const Poly& fu, const Poly& g, const Poly& gu) {
    ChainSpec spec;
    spec.r = 1;
    spec.m = 1;
    spec.n = 2;
    spec.s = s;
    spec.f_fwd = {MatrixP{{f}}};
    spec.f_bwd = {MatrixP{{fu}}};
    spec.g_fwd = {MatrixP{{g}}};
    spec.g_bwd = {MatrixP{{gu}}};
    return build_chain(spec);
}

}  // namespace linkhom::testing

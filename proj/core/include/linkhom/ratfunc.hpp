#pragma once

#include <iosfwd>
#include <string>

#include "linkhom/poly.hpp"

namespace linkhom {

/// Element of Q(t) in canonical form: gcd(num, den) = 1 and den monic.
/// The canonical form makes structural equality coincide with equality of
/// rational functions.
class RatFunc {
   public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    /// Cancels the gcd and makes the denominator monic. Throws ZeroDenominator.
    static RatFunc reduce(const Poly& num, const Poly& den);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }

    /// True when den(a) != 0, i.e. the value lies in the local ring at t = a.
    bool is_regular_at(const Rational& a) const { return !den_.eval(a).is_zero(); }
    /// num(a)/den(a); throws PoleAtPoint when den(a) = 0.
    Rational eval_at(const Rational& a) const;

    std::size_t weight() const { return num_.weight() + den_.weight(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    RatFunc inverse() const;

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    std::string to_string() const;

   private:
    RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

inline RatFunc ratfunc_reduce(const Poly& num, const Poly& den) { return RatFunc::reduce(num, den); }
inline Rational ratfunc_eval_at(const RatFunc& f, const Rational& a) { return f.eval_at(a); }

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace linkhom

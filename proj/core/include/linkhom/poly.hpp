#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/rational.hpp"

namespace linkhom {

/// Dense univariate polynomial in t over the rationals. Coefficients are
/// stored in ascending degree with trailing zeros stripped, so the zero
/// polynomial has an empty coefficient list and degree -1.
class Poly {
   public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    /// The monomial c * t^k.
    static Poly monomial(const Rational& c, int k);
    static Poly t() { return monomial(Rational(1), 1); }

    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& a) const { return eval(a); }
    Rational eval(const Rational& a) const;

    Poly monic() const;
    Poly derivative() const;

    /// Sum of coefficient bit sizes plus a degree weight; used for pivoting.
    std::size_t weight() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string to_string() const;

   private:
    void normalize();
    std::vector<Rational> c_;
};

/// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // quotient of divmod
Poly operator%(const Poly& a, const Poly& b);  // remainder of divmod

/// Exact quotient; throws linkhom::Error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly poly_pow(const Poly& p, unsigned e);

/// Monic greatest common divisor. Throws BothZero when p = q = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

/// Bezout data g = a*p + b*q with g the monic gcd; throws BothZero.
struct XgcdResult {
    Poly g, a, b;
};
XgcdResult poly_xgcd(const Poly& p, const Poly& q);

/// Horner evaluation.
inline Rational poly_eval(const Poly& p, const Rational& a) { return p.eval(a); }

/// Rational roots of a nonzero polynomial with multiplicities, in ascending
/// order, together with the cofactor left after dividing them all out.
struct RationalRootSplit {
    std::vector<std::pair<Rational, int>> roots;
    Poly cofactor;
    bool search_truncated = false;
};
RationalRootSplit rational_roots(const Poly& p);

/// If p = h^2 for a polynomial h with positive leading coefficient, return h.
bool exact_square_root(const Poly& p, Poly& root);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace linkhom

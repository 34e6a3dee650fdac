#include "linkhom/ratfunc.hpp"

#include <ostream>

#include "linkhom/error.hpp"

namespace linkhom {

RatFunc RatFunc::reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    if (num.is_zero()) return RatFunc();
    Poly n = num, d = den;
    if (!d.is_constant()) {
        Poly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = exact_div(n, g);
            d = exact_div(d, g);
        }
    }
    Rational lead_inv = d.leading().inverse();
    n *= lead_inv;
    d *= lead_inv;
    return RatFunc(std::move(n), std::move(d), 0);
}

Rational RatFunc::eval_at(const Rational& a) const {
    Rational d = den_.eval(a);
    if (d.is_zero()) throw PoleAtPoint("t = " + a.to_string());
    return num_.eval(a) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) return *this = reduce(num_ + o.num_, den_);
    Poly g = poly_gcd(den_, o.den_);
    Poly left = exact_div(o.den_, g);
    Poly right = exact_div(den_, g);
    return *this = reduce(num_ * left + o.num_ * right, den_ * left);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    // Cross-cancel before multiplying to keep intermediate degrees small.
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant()) {
        Poly g = poly_gcd(a, d);
        if (!g.is_one()) {
            a = exact_div(a, g);
            d = exact_div(d, g);
        }
    }
    if (!b.is_constant()) {
        Poly g = poly_gcd(c, b);
        if (!g.is_one()) {
            c = exact_div(c, g);
            b = exact_div(b, g);
        }
    }
    Poly n = a * c, dd = b * d;
    Rational lead_inv = dd.leading().inverse();
    n *= lead_inv;
    dd *= lead_inv;
    num_ = std::move(n);
    den_ = std::move(dd);
    return *this;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational lead_inv = num_.leading().inverse();
    return RatFunc(den_ * lead_inv, num_ * lead_inv, 0);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    auto wrap = [](const Poly& p) {
        std::string s = p.to_string();
        return p.coeffs().size() > 1 || s.find('/') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace linkhom

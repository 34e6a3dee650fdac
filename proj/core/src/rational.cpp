#include "linkhom/rational.hpp"

#include <cctype>
#include <ostream>

#include "linkhom/error.hpp"

namespace linkhom {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    for (std::size_t k = i; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw ZeroDenominator();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
    auto num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("malformed rational \"" + std::string(text) + "\"");
    auto den = parse_integer(den_text, text);
    if (sgn(den) == 0) throw ZeroDenominator();
    return Rational(num, den);
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / q_), Canonical{});
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace linkhom

#include "linkhom/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "linkhom/error.hpp"

namespace linkhom {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Rational& c, int k) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rational());
    p.c_.back() = c;
    return p;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
    return c_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& a) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= a.raw();
        acc += it->raw();
    }
    return Rational(std::move(acc));
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    Poly p = *this;
    Rational inv = leading().inverse();
    for (auto& c : p.c_) c *= inv;
    return p;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Poly(std::move(d));
}

std::size_t Poly::weight() const {
    std::size_t w = 0;
    for (const auto& c : c_) w += c.bit_size();
    return w + 64 * c_.size();
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

namespace {

// Integer coefficients c_k * den, with den the lcm of the denominators.
mpz_class integer_image(const std::vector<Rational>& c, std::vector<mpz_class>& out) {
    mpz_class den = 1;
    for (const auto& x : c)
        if (x.raw().get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.raw().get_den_mpz_t());
    out.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        mpz_divexact(out[k].get_mpz_t(), den.get_mpz_t(), c[k].raw().get_den_mpz_t());
        out[k] *= c[k].raw().get_num();
    }
    return den;
}

// Product of integer polynomials by Kronecker substitution: pack each into
// one integer at t = 2^k, multiply once, unpack signed k-bit digits. k is
// chosen so that every output coefficient fits strictly.
std::vector<mpz_class> kronecker_product(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::size_t ba = 0, bb = 0;
    for (const auto& x : a) ba = std::max(ba, mpz_sizeinbase(x.get_mpz_t(), 2));
    for (const auto& x : b) bb = std::max(bb, mpz_sizeinbase(x.get_mpz_t(), 2));
    const std::size_t terms = std::min(a.size(), b.size());
    const std::size_t k = ba + bb + mpz_sizeinbase(mpz_class(terms).get_mpz_t(), 2) + 2;
    auto pack = [k](const std::vector<mpz_class>& c) {
        mpz_class x = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), k);
            x += *it;
        }
        return x;
    };
    mpz_class x = pack(a) * pack(b);
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    mpz_class half, digit;
    mpz_ui_pow_ui(half.get_mpz_t(), 2, k - 1);
    for (auto& c : out) {
        mpz_fdiv_r_2exp(digit.get_mpz_t(), x.get_mpz_t(), k);
        if (digit >= half) {
            mpz_class full = half * 2;
            digit -= full;
        }
        c = digit;
        x -= digit;
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), k);
    }
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // The product is formed on integer images, with one canonicalization per
    // output coefficient instead of one per term.
    std::vector<mpz_class> ia, ib;
    mpz_class den = integer_image(a.c_, ia);
    den *= integer_image(b.c_, ib);
    std::vector<mpz_class> acc;
    if (ia.size() >= 8 && ib.size() >= 8) {
        acc = kronecker_product(ia, ib);
    } else {
        acc.resize(ia.size() + ib.size() - 1);
        for (std::size_t i = 0; i < ia.size(); ++i) {
            if (ia[i] == 0) continue;
            for (std::size_t j = 0; j < ib.size(); ++j)
                mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& z : acc) out.emplace_back(z, den);
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag.is_one();
        if (k == 0 || !unit) os << mag.to_string();
        if (k > 0) {
            if (!unit) os << "*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<mpq_class> r;
    r.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) r.push_back(c.raw());
    const int db = b.degree();
    const mpq_class lead_inv = 1 / b.leading().raw();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        mpq_class coef = r[static_cast<std::size_t>(k)] * lead_inv;
        if (sgn(coef) == 0) continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)].raw();
        q[static_cast<std::size_t>(k - db)] = Rational(coef);
    }
    std::vector<Rational> rem;
    rem.reserve(static_cast<std::size_t>(db));
    for (int j = 0; j < db; ++j) rem.emplace_back(std::move(r[static_cast<std::size_t>(j)]));
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("polynomial division is not exact");
    return q;
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Poly poly_pow(const Poly& p, unsigned e) {
    Poly acc(Rational(1));
    for (unsigned k = 0; k < e; ++k) acc *= p;
    return acc;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    Poly a = p.monic();
    Poly b = q.monic();
    while (!b.is_zero()) {
        Poly r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

XgcdResult poly_xgcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    if (q.is_zero()) {
        Rational c = p.leading().inverse();
        return {p * c, Poly(c), Poly()};
    }
    if (p.is_zero()) {
        Rational c = q.leading().inverse();
        return {q * c, Poly(), Poly(c)};
    }
    // Only the cofactor of p is carried (r_k = s_k p mod q); remainders are
    // kept monic, which keeps their coefficients small. The cofactor of q
    // is recovered by one exact division at the end.
    Rational c0 = p.leading().inverse(), c1 = q.leading().inverse();
    Poly r0 = p * c0, s0(c0);
    Poly r1 = q * c1, s1;
    while (!r1.is_zero()) {
        auto [quo, rem] = divmod(r0, r1);
        Poly s2 = s0 - quo * s1;
        if (!rem.is_zero()) {
            Rational c = rem.leading().inverse();
            rem *= c;
            s2 *= c;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Poly t = exact_div(r0 - s0 * p, q);
    return {std::move(r0), std::move(s0), std::move(t)};
}

namespace {

// Positive divisors of |n| in ascending order. Gives up (returns false) when
// trial division would exceed the iteration budget.
bool positive_divisors(mpz_class n, std::vector<mpz_class>& out) {
    n = abs(n);
    out.clear();
    if (n == 0) return false;
    constexpr unsigned long kBudget = 2'000'000;
    std::vector<mpz_class> small, large;
    unsigned long iter = 0;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (++iter > kBudget) return false;
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    out = small;
    out.insert(out.end(), large.rbegin(), large.rend());
    return true;
}

}  // namespace

RationalRootSplit rational_roots(const Poly& p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    RationalRootSplit out;
    Poly rest = p.monic();

    int zero_mult = 0;
    while (!rest.is_zero() && rest.degree() > 0 && rest.coeffs()[0].is_zero()) {
        rest = exact_div(rest, Poly::t());
        ++zero_mult;
    }

    std::vector<std::pair<Rational, int>> roots;
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);

    if (rest.degree() >= 1) {
        // Scale to a primitive integer polynomial for the rational root test.
        mpz_class lcm_den = 1;
        for (const auto& c : rest.coeffs()) lcm_den = lcm(lcm_den, c.denominator());
        mpz_class a0 = rest.coeffs().front().numerator() * (lcm_den / rest.coeffs().front().denominator());
        mpz_class an = rest.leading().numerator() * (lcm_den / rest.leading().denominator());
        std::vector<mpz_class> dp, dq;
        bool ok = positive_divisors(a0, dp) && positive_divisors(an, dq);
        if (!ok) {
            out.search_truncated = true;
        } else {
            std::vector<Rational> candidates;
            for (const auto& u : dp)
                for (const auto& v : dq) {
                    if (gcd(u, v) != 1) continue;
                    candidates.emplace_back(u, v);
                    candidates.emplace_back(mpz_class(-u), v);
                }
            std::sort(candidates.begin(), candidates.end());
            for (const auto& c : candidates) {
                int mult = 0;
                Poly lin{-c, Rational(1)};
                while (rest.degree() >= 1 && rest.eval(c).is_zero()) {
                    rest = exact_div(rest, lin);
                    ++mult;
                }
                if (mult > 0) roots.emplace_back(c, mult);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.roots = std::move(roots);
    out.cofactor = std::move(rest);
    return out;
}

bool exact_square_root(const Poly& p, Poly& root) {
    if (p.is_zero()) {
        root = Poly();
        return true;
    }
    if (p.degree() % 2 != 0) return false;
    const Rational& lead = p.leading();
    if (lead.sign() < 0) return false;
    mpz_class num = lead.numerator(), den = lead.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    const int d = p.degree() / 2;
    std::vector<Rational> h(static_cast<std::size_t>(d) + 1);
    h[static_cast<std::size_t>(d)] = Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
    const Rational two_lead = Rational(2) * h[static_cast<std::size_t>(d)];
    for (int k = 1; k <= d; ++k) {
        // coefficient of t^{2d-k} in h^2 = sum over i+j = 2d-k
        Rational acc = p.coeff(2 * d - k);
        for (int i = d - k + 1; i <= d; ++i) {
            int j = 2 * d - k - i;
            if (j < d - k + 1 || j > d) continue;
            acc -= h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)];
        }
        h[static_cast<std::size_t>(d - k)] = acc / two_lead;
    }
    Poly cand(std::move(h));
    if (cand * cand != p) return false;
    root = std::move(cand);
    return true;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace linkhom

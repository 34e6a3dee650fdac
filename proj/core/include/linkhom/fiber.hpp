#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>

#include "linkhom/linalg.hpp"

namespace linkhom {

/// A point of Spec Q[t]: either the rational point t = a (residue field Q)
/// or the generic point (residue field Q(t)).
class FiberPoint {
   public:
    static FiberPoint generic() { return FiberPoint(); }
    static FiberPoint at(const Rational& a) { return FiberPoint(a); }

    bool is_generic() const noexcept { return !value_.has_value(); }
    const Rational& value() const {
        if (!value_) throw Error("generic point has no coordinate");
        return *value_;
    }

    /// "t=a" or "generic".
    std::string to_string() const { return value_ ? "t=" + value_->to_string() : "generic"; }

    /// Evaluates s in the residue field and tests for zero.
    bool vanishes(const Poly& s) const { return value_ ? s.eval(*value_).is_zero() : s.is_zero(); }

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
    /// Rational points in ascending order, then the generic point.
    friend std::strong_ordering operator<=>(const FiberPoint& a, const FiberPoint& b) {
        if (a.is_generic() != b.is_generic())
            return a.is_generic() ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.is_generic()) return std::strong_ordering::equal;
        return *a.value_ <=> *b.value_;
    }

   private:
    FiberPoint() = default;
    explicit FiberPoint(Rational a) : value_(std::move(a)) {}
    std::optional<Rational> value_;
};

/// Specializes a polynomial matrix to the residue field of x: Q-valued at a
/// rational point, Q(t)-valued (plain embedding) at the generic point.
std::variant<MatrixQ, MatrixRF> eval_matrix(const MatrixP& m, const FiberPoint& x);

/// Typed specialization for code that already knows the residue field.
template <FieldScalar K>
Matrix<K> specialize(const MatrixP& m, const FiberPoint& x) {
    if constexpr (std::same_as<K, Rational>)
        return eval_at(m, x.value());
    else
        return to_ratfunc(m);
}

/// Calls fn(tag) with tag a default-constructed Rational for rational points
/// and a RatFunc at the generic point, so fn can dispatch on the field.
template <class Fn>
decltype(auto) with_residue_field(const FiberPoint& x, Fn&& fn) {
    if (x.is_generic()) return fn(RatFunc());
    return fn(Rational());
}

}  // namespace linkhom

#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkhom/chain.hpp"

namespace linkhom {

enum class Condition { I, II, III };
std::string condition_name(Condition c);

/// Residual matrix of a failed identity, or a witness vector/basis in a fiber.
using Witness = std::variant<MatrixP, MatrixQ, MatrixRF>;

struct ConditionFailure {
    std::size_t index;  // 1-based map index i
    std::string description;
    Witness witness;
};

struct ConditionReport {
    Condition condition;
    std::optional<FiberPoint> point;  // empty: checked globally over Q[t]
    bool passed = true;
    std::vector<ConditionFailure> failures;
};

/// f_i f^i = f^i f_i = s id_r and g_i g^i = g^i g_i = s id_m, exactly over
/// Q[t]. Each failure carries the residual (product - s id).
ConditionReport check_condition_I(const LinkedChain& chain);

struct SpecialPoints {
    std::vector<Rational> roots;  // distinct rational roots of s, ascending
    bool s_is_zero = false;       // every point is special
    std::vector<std::string> warnings;
};

/// Rational points where s vanishes, found by rational-root extraction. A
/// warning is recorded when a nonconstant factor without rational roots
/// remains, since its vanishing locus is not checked.
SpecialPoints special_points(const LinkedChain& chain);

/// In the fiber at x: ker g_i = im g^i (in G_i) and ker g^i = im g_i (in
/// G_{i+1}) for every i. Throws NotASpecialPoint when s(x) != 0.
ConditionReport check_condition_II(const LinkedChain& chain, const FiberPoint& x);

/// In the fiber at x, for i = 1..n-2: im g_i is complementary to ker g_{i+1}
/// and im g^{i+1} to ker g^i, both in G_{i+1}. Throws NotASpecialPoint.
ConditionReport check_condition_III(const LinkedChain& chain, const FiberPoint& x);

/// The points at which conditions (II)/(III) have to be verified: all
/// rational roots of s, and additionally the generic point when s = 0.
std::vector<FiberPoint> points_to_check(const SpecialPoints& sp);

}  // namespace linkhom

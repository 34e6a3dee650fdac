#include "linkhom/fiber.hpp"

namespace linkhom {

std::variant<MatrixQ, MatrixRF> eval_matrix(const MatrixP& m, const FiberPoint& x) {
    if (x.is_generic()) return to_ratfunc(m);
    return eval_at(m, x.value());
}

}  // namespace linkhom

#include "severi/exactmath/matrix.hpp"

namespace severi {

RationalMatrix evaluate(const PolynomialMatrix& m, const Bindings& bindings) {
  return m.unaryExpr([&](const Polynomial& p) { return evaluate(p, bindings); });
}

Polynomial matrix_det(const PolynomialMatrix& m) { return cofactor_determinant(m); }

Rational matrix_det(const PolynomialMatrix& m, const Bindings& at) {
  detail::require_square(m);
  return elimination_determinant(evaluate(m, at));
}

RationalMatrix matrix_invert(const PolynomialMatrix& m, const Bindings& at) {
  detail::require_square(m);
  return exact_inverse(evaluate(m, at));
}

}  // namespace severi

#include "severi/hilbert.hpp"

#include <numeric>

#include "severi/errors.hpp"
#include "severi/exactmath/golden.hpp"

namespace severi {

std::optional<std::int64_t> admissible(std::int64_t d) {
  if (d < 1) throw DomainError("degree must be positive, got " + std::to_string(d));
  if ((d * (d + 3)) % 6 != 0) return std::nullopt;
  const std::int64_t n = d * (d + 3) / 6;
  if (d < 5 || (d == 6 && n == 9)) return std::nullopt;
  return n;
}

std::string_view to_string(PhiReason reason) {
  switch (reason) {
    case PhiReason::Inequality: return "inequality";
    case PhiReason::FibonacciList: return "fibonacci_list";
    case PhiReason::NotMember: return "not_member";
  }
  return "";
}

namespace {

bool is_even_fibonacci_ratio(std::int64_t s, std::int64_t r) {
  const std::int64_t g = std::gcd(s, r);
  s /= g;
  r /= g;
  // (num, den) walks (F0, F1), (F2, F3), (F4, F5), ...
  std::int64_t num = 0;
  std::int64_t den = 1;
  while (den <= r) {
    if (num == s && den == r) return true;
    const std::int64_t next_num = num + den;
    const std::int64_t next_den = next_num + den;
    num = next_num;
    den = next_den;
  }
  return false;
}

}  // namespace

PhiVerdict phi_member(std::int64_t s, std::int64_t r) {
  if (r < 1 || s < 0 || s > r)
    throw DomainError("phi_member needs 0 <= s <= r, r >= 1; got s=" + std::to_string(s) +
                      " r=" + std::to_string(r));
  if (golden_exceeds(s, r)) return {true, PhiReason::Inequality};
  if (is_even_fibonacci_ratio(s, r)) return {true, PhiReason::FibonacciList};
  return {false, PhiReason::NotMember};
}

Bindings Instance::bindings() const {
  return {{Symbol::d, Rational(d)}, {Symbol::n, Rational(n)}, {Symbol::r, Rational(r)}};
}

Instance make_instance(std::int64_t d) {
  const auto n = admissible(d);
  if (!n)
    throw NotAdmissible("degree " + std::to_string(d) +
                        " is not admissible: need 6n = d^2 + 3d, d >= 5 and (d, n) != (6, 9)");
  std::int64_t r = 0;
  while ((r + 1) * (r + 2) / 2 <= *n) ++r;
  Instance inst{};
  inst.d = d;
  inst.n = *n;
  inst.r = r;
  inst.s = *n - r * (r + 1) / 2;
  inst.genus = (d - 1) * (d - 2) / 2 - *n;
  inst.cone = phi_member(inst.s, inst.r);
  return inst;
}

CurveClass moving_curve_c1() { return {"C1", Polynomial(1), Polynomial(0)}; }

CurveClass moving_curve_c2() {
  const Polynomial r = Polynomial::variable(Symbol::r);
  const Polynomial n = Polynomial::variable(Symbol::n);
  return {"C2", r, (r - 1) * (r - 2) - 2 + 2 * n};
}

CurveClass moving_curve(std::string_view name) {
  if (name == "C1") return moving_curve_c1();
  if (name == "C2") return moving_curve_c2();
  throw UnknownName("unknown curve '" + std::string(name) + "' (expected C1 or C2)");
}

Polynomial pair_symbolic(const CurveClass& curve, const HilbClass& cls) {
  return curve.pair_h * cls.h + curve.pair_b * cls.b;
}

Rational pair(const CurveClass& curve, const HilbClass& cls, const Instance& inst) {
  return evaluate(pair_symbolic(curve, cls), inst.bindings());
}

std::string Witness::describe() const {
  std::string out = curve + " . class = " + to_string(value) + " < 0: not pseudo-effective";
  if (!cone_certified) out += " (moving cone generation not certified for this (r, s))";
  return out;
}

std::optional<Witness> pseudoeffective_witness(const HilbClass& cls, const Instance& inst) {
  for (const CurveClass& curve : {moving_curve_c1(), moving_curve_c2()}) {
    const Rational value = pair(curve, cls, inst);
    if (value < 0) return Witness{curve.name, value, inst.cone.member};
  }
  return std::nullopt;
}

}  // namespace severi

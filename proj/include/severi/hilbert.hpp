#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "severi/exactmath/polynomial.hpp"
#include "severi/exactmath/rational.hpp"
#include "severi/picard.hpp"

namespace severi {

/// n = d(d+3)/6 when the nodes map is birational onto the Hilbert scheme:
/// 6n = d^2 + 3d has an integer solution, d >= 5 and (d, n) != (6, 9).
/// Throws DomainError for d < 1.
std::optional<std::int64_t> admissible(std::int64_t d);

enum class PhiReason { Inequality, FibonacciList, NotMember };

std::string_view to_string(PhiReason reason);

struct PhiVerdict {
  bool member;
  PhiReason reason;

  friend bool operator==(const PhiVerdict&, const PhiVerdict&) = default;
};

/// Membership of s/r in the set where C1 and C2 generate the moving cone:
/// either (1 + sqrt 5) s > 2r, or s/r reduces to F(2k)/F(2k+1)
/// (0/1, 1/2, 3/5, 8/13, 21/34, ...).
PhiVerdict phi_member(std::int64_t s, std::int64_t r);

/// An admissible configuration with n = r(r+1)/2 + s, 0 <= s <= r.
struct Instance {
  std::int64_t d;
  std::int64_t n;
  std::int64_t r;
  std::int64_t s;
  /// (d-1)(d-2)/2 - n, for display only.
  std::int64_t genus;
  PhiVerdict cone;

  /// Binds d, n and r.
  Bindings bindings() const;
};

/// Throws NotAdmissible unless admissible(d).
Instance make_instance(std::int64_t d);

/// A curve class on the Hilbert scheme through its intersection numbers
/// with H[n] and B[n].
struct CurveClass {
  std::string name;
  Polynomial pair_h;
  Polynomial pair_b;
};

/// n-1 fixed points plus one moving along a line: C1.H = 1, C1.B = 0.
CurveClass moving_curve_c1();
/// A pencil in |O_C(Gamma)| on a degree-r curve: C2.H = r,
/// C2.B = 2g(C) - 2 + 2n = (r-1)(r-2) - 2 + 2n.
CurveClass moving_curve_c2();

/// Throws UnknownName for anything but "C1"/"C2".
CurveClass moving_curve(std::string_view name);

/// pair_h * h + pair_b * b, symbolic in d, n, r.
Polynomial pair_symbolic(const CurveClass& curve, const HilbClass& cls);

/// Exact intersection number at an instance.
Rational pair(const CurveClass& curve, const HilbClass& cls, const Instance& inst);

struct Witness {
  std::string curve;
  Rational value;
  bool cone_certified;

  std::string describe() const;
};

/// A moving curve meeting cls negatively proves cls is not pseudo-effective.
/// C1 is tried before C2.
std::optional<Witness> pseudoeffective_witness(const HilbClass& cls, const Instance& inst);

}  // namespace severi

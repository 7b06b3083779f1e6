#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "severi/exactmath/matrix.hpp"
#include "severi/exactmath/polynomial.hpp"
#include "severi/exactmath/rational.hpp"

namespace severi {

/// Two bases of the 5-dimensional subspace of Pic(W):
///   DH  = (A, B, C, Delta, Delta_{0,1})
///   DIV = (TN, TR, CP, NL, Delta_{0,1})
enum class Basis { DH, DIV };

inline constexpr std::size_t kSeveriRank = 5;

namespace dh {
inline constexpr std::size_t A = 0, B = 1, C = 2, Delta = 3, Delta01 = 4;
}
namespace div {
inline constexpr std::size_t TN = 0, TR = 1, CP = 2, NL = 3, Delta01 = 4;
}

std::string_view to_string(Basis basis);

/// A divisor class on the Severi variety: five coefficients in one basis,
/// each a polynomial in d only.
class SeveriClass {
 public:
  using Coeffs = std::array<Polynomial, kSeveriRank>;

  SeveriClass(Basis basis, Coeffs coeffs);

  static SeveriClass zero(Basis basis);
  static SeveriClass unit(Basis basis, std::size_t index);

  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const { return coeffs_; }
  const Polynomial& operator[](std::size_t i) const { return coeffs_[i]; }

  friend SeveriClass operator+(const SeveriClass& a, const SeveriClass& b);
  friend SeveriClass operator*(const Polynomial& alpha, const SeveriClass& c);
  friend bool operator==(const SeveriClass&, const SeveriClass&) = default;

 private:
  Basis basis_;
  Coeffs coeffs_;
};

std::string to_string(const SeveriClass& c);

/// h * H[n] + b * B[n] in Pic of the Hilbert scheme of n points.
struct HilbClass {
  Polynomial h;
  Polynomial b;

  friend bool operator==(const HilbClass&, const HilbClass&) = default;
  friend HilbClass operator+(const HilbClass& x, const HilbClass& y) {
    return {x.h + y.h, x.b + y.b};
  }
  friend HilbClass operator*(const Polynomial& alpha, const HilbClass& x) {
    return {alpha * x.h, alpha * x.b};
  }
};

/// "(3*d - 3)*H[n] - 5/2*B[n]"; the zero class prints as "0".
std::string to_string(const HilbClass& c);

/// How the change-of-basis matrix is read:
///   RowsOldInNew  row i    = DH element i in DIV coordinates
///   ColsOldInNew  column j = DH element j in DIV coordinates
///   RowsNewInOld  row i    = DIV element i in DH coordinates
///   ColsNewInOld  column j = DIV element j in DH coordinates
enum class Convention { RowsOldInNew, ColsOldInNew, RowsNewInOld, ColsNewInOld };

inline constexpr std::array<Convention, 4> kAllConventions = {
    Convention::RowsOldInNew, Convention::ColsOldInNew, Convention::RowsNewInOld,
    Convention::ColsNewInOld};

/// "ROWS_OLD_IN_NEW" etc.
std::string_view to_string(Convention conv);
std::optional<Convention> parse_convention(std::string_view text);

/// The DH -> DIV matrix exactly as printed, entries polynomial in d.
PolynomialMatrix basis_matrix();

/// Matrix T with y_DIV = T * x_DH at the given degree, per convention.
/// Throws Singular when the evaluated basis matrix is singular.
RationalMatrix dh_to_div_transform(Convention conv, const Rational& at_d);

/// Changes basis at a concrete degree; the direction follows c.basis().
SeveriClass convert(const SeveriClass& c, Convention conv, const Rational& at_d);
/// As above, but the target basis is explicit; WrongBasis if c is already in it.
SeveriClass convert(const SeveriClass& c, Basis target, Convention conv, const Rational& at_d);

/// Pushforward along the nodes map:
///   TN -> B[n], TR -> 0, CP -> (3d-3)H[n] - 5/2 B[n], NL -> H[n], Delta_{0,1} -> 0.
/// Only accepts DIV-basis classes (WrongBasis otherwise).
HilbClass pushforward(const SeveriClass& c);

/// pushforward(alpha q + q2) == alpha pushforward(q) + pushforward(q2).
bool linearity_check(const SeveriClass& q, const SeveriClass& q2, const Rational& alpha);

/// The canonical class of W in DH coordinates:
/// K_W = -3/5 A + 3/5 B + 11/12 C - 13/12 Delta.
SeveriClass canonical_class_dh();

/// Target of the K_W consistency check: -3 H[n].
HilbClass canonical_class_target();

struct KwDiagnosticRow {
  Convention convention;
  std::int64_t d;
  std::int64_t n;
  SeveriClass div;
  HilbClass pushed;
  bool matched;
};

/// Informational report: K_W converted DH -> DIV under every convention at
/// every admissible degree up to d_max, pushed forward and compared to -3H.
struct KwDiagnostic {
  std::vector<KwDiagnosticRow> rows;

  std::size_t matches(Convention conv) const;
  std::string render() const;
};

KwDiagnostic kw_diagnostic(std::int64_t d_max = 30);

}  // namespace severi

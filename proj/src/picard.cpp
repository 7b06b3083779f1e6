#include "severi/picard.hpp"

#include <sstream>

#include "severi/errors.hpp"
#include "severi/hilbert.hpp"
#include "severi/reference_forms.hpp"

namespace severi {

std::string_view to_string(Basis basis) { return basis == Basis::DH ? "DH" : "DIV"; }

SeveriClass::SeveriClass(Basis basis, Coeffs coeffs) : basis_(basis), coeffs_(std::move(coeffs)) {
  for (const Polynomial& c : coeffs_)
    if (!c.uses_only({Symbol::d}))
      throw DomainError("Severi class coefficients must be polynomials in d only, got " +
                        to_string(c));
}

SeveriClass SeveriClass::zero(Basis basis) { return SeveriClass(basis, Coeffs{}); }

SeveriClass SeveriClass::unit(Basis basis, std::size_t index) {
  if (index >= kSeveriRank) throw DomainError("basis index out of range");
  Coeffs coeffs{};
  coeffs[index] = Polynomial(1);
  return SeveriClass(basis, coeffs);
}

SeveriClass operator+(const SeveriClass& a, const SeveriClass& b) {
  if (a.basis_ != b.basis_) throw WrongBasis("cannot add classes written in different bases");
  SeveriClass::Coeffs sum;
  for (std::size_t i = 0; i < kSeveriRank; ++i) sum[i] = a.coeffs_[i] + b.coeffs_[i];
  return SeveriClass(a.basis_, sum);
}

SeveriClass operator*(const Polynomial& alpha, const SeveriClass& c) {
  SeveriClass::Coeffs scaled;
  for (std::size_t i = 0; i < kSeveriRank; ++i) scaled[i] = alpha * c.coeffs_[i];
  return SeveriClass(c.basis_, scaled);
}

std::string to_string(const SeveriClass& c) {
  std::string out = std::string(to_string(c.basis())) + "(";
  for (std::size_t i = 0; i < kSeveriRank; ++i) {
    if (i > 0) out += ", ";
    out += to_string(c[i]);
  }
  return out + ")";
}

namespace {

std::string coefficient_times(const Polynomial& coeff, std::string_view generator) {
  if (coeff == Polynomial(1)) return std::string(generator);
  if (coeff == Polynomial(-1)) return "-" + std::string(generator);
  if (coeff.terms().size() == 1) return to_string(coeff) + "*" + std::string(generator);
  return "(" + to_string(coeff) + ")*" + std::string(generator);
}

}  // namespace

std::string to_string(const HilbClass& c) {
  if (c.h.is_zero() && c.b.is_zero()) return "0";
  if (c.b.is_zero()) return coefficient_times(c.h, "H[n]");
  if (c.h.is_zero()) return coefficient_times(c.b, "B[n]");
  const bool negative = c.b.terms().rbegin()->second < 0;
  return coefficient_times(c.h, "H[n]") + (negative ? " - " : " + ") +
         coefficient_times(negative ? -c.b : c.b, "B[n]");
}

std::string_view to_string(Convention conv) {
  switch (conv) {
    case Convention::RowsOldInNew: return "ROWS_OLD_IN_NEW";
    case Convention::ColsOldInNew: return "COLS_OLD_IN_NEW";
    case Convention::RowsNewInOld: return "ROWS_NEW_IN_OLD";
    case Convention::ColsNewInOld: return "COLS_NEW_IN_OLD";
  }
  return "";
}

std::optional<Convention> parse_convention(std::string_view text) {
  for (Convention conv : kAllConventions)
    if (to_string(conv) == text) return conv;
  return std::nullopt;
}

PolynomialMatrix basis_matrix() {
  const auto& printed = reference::basis_matrix();
  PolynomialMatrix m(kSeveriRank, kSeveriRank);
  for (std::size_t i = 0; i < kSeveriRank; ++i)
    for (std::size_t j = 0; j < kSeveriRank; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_polynomial(printed[i][j]);
  return m;
}

RationalMatrix dh_to_div_transform(Convention conv, const Rational& at_d) {
  const RationalMatrix m = evaluate(basis_matrix(), {{Symbol::d, at_d}});
  if (elimination_determinant(m) == 0)
    throw Singular("change-of-basis matrix is singular at d = " + to_string(at_d));
  switch (conv) {
    case Convention::RowsOldInNew: return m.transpose();
    case Convention::ColsOldInNew: return m;
    case Convention::RowsNewInOld: return exact_inverse(m.transpose());
    case Convention::ColsNewInOld: return exact_inverse(m);
  }
  return m;
}

SeveriClass convert(const SeveriClass& c, Convention conv, const Rational& at_d) {
  return convert(c, c.basis() == Basis::DH ? Basis::DIV : Basis::DH, conv, at_d);
}

SeveriClass convert(const SeveriClass& c, Basis target, Convention conv, const Rational& at_d) {
  if (c.basis() == target)
    throw WrongBasis("class is already in the " + std::string(to_string(target)) + " basis");
  RationalMatrix transform = dh_to_div_transform(conv, at_d);
  if (target == Basis::DH) transform = exact_inverse(transform);

  const Bindings at = {{Symbol::d, at_d}};
  RationalVector x(kSeveriRank);
  for (std::size_t i = 0; i < kSeveriRank; ++i)
    x(static_cast<Eigen::Index>(i)) = evaluate(c[i], at);
  const RationalVector y = transform * x;

  SeveriClass::Coeffs out;
  for (std::size_t i = 0; i < kSeveriRank; ++i)
    out[i] = Polynomial(y(static_cast<Eigen::Index>(i)));
  return SeveriClass(target, out);
}

HilbClass pushforward(const SeveriClass& c) {
  if (c.basis() != Basis::DIV)
    throw WrongBasis("pushforward takes DIV-basis classes; convert DH classes first");
  const Polynomial d = Polynomial::variable(Symbol::d);
  // TR and Delta_{0,1} are contracted.
  return {c[div::CP] * (3 * d - 3) + c[div::NL],
          c[div::TN] - Polynomial(make_rational(5, 2)) * c[div::CP]};
}

bool linearity_check(const SeveriClass& q, const SeveriClass& q2, const Rational& alpha) {
  const Polynomial a(alpha);
  return pushforward(a * q + q2) == a * pushforward(q) + pushforward(q2);
}

SeveriClass canonical_class_dh() {
  return SeveriClass(Basis::DH, {Polynomial(make_rational(-3, 5)), Polynomial(make_rational(3, 5)),
                                 Polynomial(make_rational(11, 12)),
                                 Polynomial(make_rational(-13, 12)), Polynomial(0)});
}

HilbClass canonical_class_target() { return {Polynomial(-3), Polynomial(0)}; }

std::size_t KwDiagnostic::matches(Convention conv) const {
  std::size_t count = 0;
  for (const auto& row : rows)
    if (row.convention == conv && row.matched) ++count;
  return count;
}

std::string KwDiagnostic::render() const {
  std::ostringstream out;
  out << "K_W diagnostic: DH coordinates " << to_string(canonical_class_dh())
      << " -> DIV -> pushforward\n";
  out << "target: h=" << to_string(canonical_class_target().h)
      << " b=" << to_string(canonical_class_target().b) << "\n";
  for (Convention conv : kAllConventions) {
    out << "[" << to_string(conv) << "]\n";
    std::size_t total = 0;
    for (const auto& row : rows) {
      if (row.convention != conv) continue;
      ++total;
      out << "d=" << row.d << " n=" << row.n << " div=" << to_string(row.div)
          << " push=(" << to_string(row.pushed.h) << ", " << to_string(row.pushed.b) << ")"
          << " match=" << (row.matched ? "yes" : "no") << "\n";
    }
    out << "summary " << to_string(conv) << ": " << matches(conv) << "/" << total << " match\n";
  }
  return out.str();
}

KwDiagnostic kw_diagnostic(std::int64_t d_max) {
  KwDiagnostic report;
  const SeveriClass kw = canonical_class_dh();
  const HilbClass target = canonical_class_target();
  for (Convention conv : kAllConventions) {
    for (std::int64_t d = 1; d <= d_max; ++d) {
      const auto n = admissible(d);
      if (!n) continue;
      const SeveriClass div = convert(kw, Basis::DIV, conv, Rational(d));
      const Bindings at = {{Symbol::d, Rational(d)}};
      const HilbClass symbolic = pushforward(div);
      const HilbClass pushed{Polynomial(evaluate(symbolic.h, at)),
                             Polynomial(evaluate(symbolic.b, at))};
      report.rows.push_back({conv, d, *n, div, pushed, pushed == target});
    }
  }
  return report;
}

}  // namespace severi

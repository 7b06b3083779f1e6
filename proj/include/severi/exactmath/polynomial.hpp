#pragma once

#include <array>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "severi/exactmath/rational.hpp"

namespace severi {

/// The four symbols every formula is written in: degree d, node count n,
/// and the (r, s) decomposition n = r(r+1)/2 + s.
enum class Symbol : std::uint8_t { d = 0, n = 1, r = 2, s = 3 };

inline constexpr std::size_t kSymbolCount = 4;
inline constexpr std::array<Symbol, kSymbolCount> kAllSymbols = {Symbol::d, Symbol::n, Symbol::r,
                                                                 Symbol::s};

char symbol_name(Symbol sym);

/// Exponent vector indexed by Symbol. std::array's lexicographic operator<
/// gives the fixed (d, n, r, s) lex order.
using Monomial = std::array<unsigned, kSymbolCount>;

using Bindings = std::map<Symbol, Rational>;

/// Multivariate polynomial over Rational in {d, n, r, s}. Zero coefficients
/// are never stored, so structural equality is polynomial equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(Symbol sym);
  static Polynomial term(const Monomial& mono, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& mono) const;
  unsigned degree(Symbol sym) const;
  /// True when every stored monomial only involves the listed symbols.
  bool uses_only(std::initializer_list<Symbol> allowed) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void add_term(const Monomial& mono, const Rational& coeff);

  Terms terms_;
};

/// Exact substitution. Throws UnboundSymbol if a symbol in p has no binding.
Rational evaluate(const Polynomial& p, const Bindings& bindings);

/// Substitutes only the bound symbols; the others stay symbolic.
Polynomial partial_evaluate(const Polynomial& p, const Bindings& bindings);

/// Dividing by a nonzero constant; throws DomainError on zero.
Polynomial scale(const Polynomial& p, const Rational& factor);

/// "d^2*n", or "1" for the constant monomial.
std::string to_string(const Monomial& mono);
Monomial parse_monomial(std::string_view text);

/// Terms in descending lex order, e.g. "44*d^3 - 272*d^2 + 316*d - 36".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses ordinary infix notation over d, n, r, s: integers, + - * /, ^ with
/// a non-negative integer exponent, parentheses and implicit multiplication
/// ("5/2d(d-3)"). Division is only allowed by nonzero constants.
Polynomial parse_polynomial(std::string_view text);

}  // namespace severi

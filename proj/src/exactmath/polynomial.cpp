#include "severi/exactmath/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "severi/errors.hpp"

namespace severi {

char symbol_name(Symbol sym) {
  static constexpr std::array<char, kSymbolCount> names = {'d', 'n', 'r', 's'};
  return names[static_cast<std::size_t>(sym)];
}

namespace {

std::optional<Symbol> symbol_from_char(char c) {
  for (Symbol sym : kAllSymbols)
    if (symbol_name(sym) == c) return sym;
  return std::nullopt;
}

constexpr Monomial kOne = {0, 0, 0, 0};

}  // namespace

Polynomial::Polynomial(const Rational& constant) { add_term(kOne, constant); }

Polynomial Polynomial::variable(Symbol sym) {
  Monomial mono = kOne;
  mono[static_cast<std::size_t>(sym)] = 1;
  return term(mono, Rational(1));
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& coeff) {
  Polynomial p;
  p.add_term(mono, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kOne);
}

Rational Polynomial::constant_term() const { return coefficient(kOne); }

Rational Polynomial::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree(Symbol sym) const {
  unsigned deg = 0;
  for (const auto& [mono, coeff] : terms_) deg = std::max(deg, mono[static_cast<std::size_t>(sym)]);
  return deg;
}

bool Polynomial::uses_only(std::initializer_list<Symbol> allowed) const {
  for (const auto& [mono, coeff] : terms_) {
    for (Symbol sym : kAllSymbols) {
      if (mono[static_cast<std::size_t>(sym)] == 0) continue;
      if (std::find(allowed.begin(), allowed.end(), sym) == allowed.end()) return false;
    }
  }
  return true;
}

void Polynomial::add_term(const Monomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  Polynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kSymbolCount; ++i) m[i] = ma[i] + mb[i];
      product.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [mono, coeff] : a.terms_) coeff = -coeff;
  return a;
}

namespace {

Rational power(const Rational& base, unsigned exp) {
  Rational result(1);
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

Polynomial partial_evaluate(const Polynomial& p, const Bindings& bindings) {
  Polynomial result;
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial rest = mono;
    Rational c = coeff;
    for (const auto& [sym, value] : bindings) {
      auto& e = rest[static_cast<std::size_t>(sym)];
      c *= power(value, e);
      e = 0;
    }
    result += Polynomial::term(rest, c);
  }
  return result;
}

Rational evaluate(const Polynomial& p, const Bindings& bindings) {
  Rational total(0);
  for (const auto& [mono, coeff] : p.terms()) {
    Rational value = coeff;
    for (Symbol sym : kAllSymbols) {
      const unsigned e = mono[static_cast<std::size_t>(sym)];
      if (e == 0) continue;
      const auto it = bindings.find(sym);
      if (it == bindings.end())
        throw UnboundSymbol(std::string("symbol '") + symbol_name(sym) + "' is not bound");
      value *= power(it->second, e);
    }
    total += value;
  }
  return total;
}

Polynomial scale(const Polynomial& p, const Rational& factor) { return p * Polynomial(factor); }

std::string to_string(const Monomial& mono) {
  std::string out;
  for (Symbol sym : kAllSymbols) {
    const unsigned e = mono[static_cast<std::size_t>(sym)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += symbol_name(sym);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text) {
  const Polynomial p = parse_polynomial(text);
  if (p.terms().size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("not a monomial: '" + std::string(text) + "'");
  return p.terms().begin()->first;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, coeff] = *it;
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mono == kOne) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += to_string(mono);
    } else {
      out += to_string(magnitude) + "*" + to_string(mono);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || symbol_from_char(c);
  }

  Polynomial expression() {
    Polynomial result;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    result = term();
    if (negate) result = -result;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+')
        result += term();
      else
        result -= term();
    }
    return result;
  }

  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        result *= factor();
      } else if (c == '/') {
        ++pos_;
        const Polynomial divisor = factor();
        if (!divisor.is_constant() || divisor.is_zero()) fail("division by a non-constant or zero");
        result = scale(result, Rational(1) / divisor.constant_term());
      } else if (starts_factor()) {
        result *= factor();
      } else {
        return result;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned exp = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    Polynomial result(1);
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (const auto sym = symbol_from_char(c)) {
      ++pos_;
      return Polynomial::variable(*sym);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace severi

#include "severi/exactmath/rational.hpp"

#include <cctype>

#include "severi/errors.hpp"

namespace severi {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = den < 0 ? decltype(value_)(-num, -den) : decltype(value_)(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational make_rational(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

std::string to_string(const Rational& q) {
  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw ParseError("malformed fraction '" + std::string(text) + "'");
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << to_string(q); }

bool is_integer(const Rational& q) { return q.denominator() == 1; }

}  // namespace severi

#include "grass/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace grass {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
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
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class denominator(std::string{den});
  if (denominator == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational value(mpz_class(std::string{num}), denominator);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  mpz_class out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return Rational(out);
}

}  // namespace grass

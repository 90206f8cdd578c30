#include "rigidity/rational.hpp"

#include <stdexcept>

namespace rigidity {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  Integer num, den(1);
  auto parse_int = [&](const std::string& s, Integer& out) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad rational literal: " + text);
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational literal: " + text);
    }
    out.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  };
  if (slash == std::string::npos) {
    parse_int(text, num);
  } else {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
  }
  if (den == 0) throw std::invalid_argument("zero denominator in: " + text);
  return make_rational(num, den);
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& base, Exponent exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return pow(Rational(1) / base, -exp);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
  return make_rational(num, den);
}

}  // namespace rigidity

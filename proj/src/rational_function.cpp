#include "rigidity/rational_function.hpp"

#include <stdexcept>

namespace rigidity {

std::string to_string(const ExtendedValue& v) {
  return v.is_finite() ? to_string(v.value()) : std::string("diverges");
}

RationalFunction::RationalFunction(LaurentPolynomial p) : num_(std::move(p)), den_(1) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPolynomial(1);
    return;
  }
  const Exponent shift = -den.min_exponent();
  num = num.shifted(shift);
  den = den.shifted(shift);
  if (den.size() > 1) {
    const LaurentPolynomial common = gcd(num, den);
    if (!(common == LaurentPolynomial(1))) {
      num = *divide_exact(num, common);
      den = *divide_exact(den, common);
    }
  }
  LaurentPolynomial prim = primitive_part(den);
  const Rational scale = prim.lowest_coefficient() / den.lowest_coefficient();
  num_ = num.scaled(scale);
  den_ = std::move(prim);
}

std::optional<Rational> RationalFunction::constant_value() const {
  if (den_ == LaurentPolynomial(1) && num_.is_constant()) return num_.coefficient(0);
  return std::nullopt;
}

ExtendedValue RationalFunction::limit_at_zero() const {
  if (num_.is_zero()) return ExtendedValue::finite(0);
  const Exponent en = num_.min_exponent();
  const Exponent ed = den_.min_exponent();
  if (en > ed) return ExtendedValue::finite(0);
  if (en < ed) return ExtendedValue::diverges();
  return ExtendedValue::finite(num_.lowest_coefficient() / den_.lowest_coefficient());
}

ExtendedValue RationalFunction::limit_at_infinity() const {
  if (num_.is_zero()) return ExtendedValue::finite(0);
  const Exponent en = num_.max_exponent();
  const Exponent ed = den_.max_exponent();
  if (en < ed) return ExtendedValue::finite(0);
  if (en > ed) return ExtendedValue::diverges();
  return ExtendedValue::finite(num_.leading_coefficient() / den_.leading_coefficient());
}

std::optional<Rational> RationalFunction::evaluate(const Rational& x) const {
  if (x == 0) throw std::domain_error("rational function evaluated at g = 0");
  const Rational d = den_.evaluate(x);
  if (d == 0) return std::nullopt;
  return Rational(num_.evaluate(x) / d);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
  } else {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction();
  if (den_ == LaurentPolynomial(1) && rhs.den_ == LaurentPolynomial(1)) {
    num_ *= rhs.num_;
    return *this;
  }
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero rational function");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
  a += b;
  return a;
}

RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
  a -= b;
  return a;
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(-a.numerator(), a.denominator());
}

RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
  a *= b;
  return a;
}

RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
  a /= b;
  return a;
}

std::string to_string(const RationalFunction& f) {
  if (f.denominator() == LaurentPolynomial(1)) return to_string(f.numerator());
  return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

}  // namespace rigidity

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rigidity/laurent.hpp"

namespace rigidity {

/// Limit of a rational function at 0 or infinity: a finite rational or a
/// divergence.
class ExtendedValue {
 public:
  static ExtendedValue finite(Rational v) { return ExtendedValue(std::move(v)); }
  static ExtendedValue diverges() { return ExtendedValue(); }

  bool is_finite() const { return value_.has_value(); }
  /// Requires is_finite().
  const Rational& value() const { return value_.value(); }

  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;

 private:
  ExtendedValue() = default;
  explicit ExtendedValue(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

std::string to_string(const ExtendedValue& v);

/// Quotient of two Laurent polynomials held in a strict normal form, so that
/// equal functions have identical representations:
///  - the denominator has minimum exponent 0, integer coefficients with
///    content 1, and a positive constant term;
///  - numerator and denominator are coprime as ordinary polynomials once the
///    numerator's power of g is factored out;
///  - zero is 0/1.
/// The numerator carries whatever rational scale remains.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(implicit)
  RationalFunction(LaurentPolynomial p);  // NOLINT(implicit)
  /// Canonicalizes num/den. Throws std::domain_error if den is zero.
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The constant value when the function does not depend on g.
  std::optional<Rational> constant_value() const;

  ExtendedValue limit_at_zero() const;
  ExtendedValue limit_at_infinity() const;

  /// Exact value at x != 0; nullopt at a pole. Throws std::domain_error at 0.
  std::optional<Rational> evaluate(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  struct Canonical {};
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

/// "num" when the denominator is 1, else "(num)/(den)".
std::string to_string(const RationalFunction& f);

}  // namespace rigidity

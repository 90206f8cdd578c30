#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rigidity/rational.hpp"

namespace rigidity {

/// Sparse Laurent polynomial in one indeterminate g with rational
/// coefficients. Zero coefficients are never stored; the zero polynomial
/// has no terms. Exponents may be negative.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& constant);  // NOLINT(implicit)
  LaurentPolynomial(long constant) : LaurentPolynomial(Rational(constant)) {}  // NOLINT(implicit)
  explicit LaurentPolynomial(TermMap terms);

  /// c * g^e
  static LaurentPolynomial monomial(const Rational& c, Exponent e);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Exponent e) const;

  // The following require a nonzero polynomial.
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const Rational& lowest_coefficient() const;
  const Rational& leading_coefficient() const;

  /// True when the only term (if any) sits at exponent 0.
  bool is_constant() const;

  /// Multiplication by g^e.
  LaurentPolynomial shifted(Exponent e) const;

  /// Multiplication by a scalar.
  LaurentPolynomial scaled(const Rational& s) const;

  /// Exact value at x. Throws std::domain_error for x == 0 when a negative
  /// exponent is present.
  Rational evaluate(const Rational& x) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  TermMap terms_;
};

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b);
LaurentPolynomial operator-(LaurentPolynomial a);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// The monomial g^e with coefficient 1.
inline LaurentPolynomial g_pow(Exponent e) { return LaurentPolynomial::monomial(1, e); }

/// Scales p so that its coefficients are coprime integers and its
/// lowest-degree coefficient is positive. Exponents are left untouched.
/// Zero maps to zero.
LaurentPolynomial primitive_part(const LaurentPolynomial& p);

/// Greatest common divisor of a and b, each first multiplied by the monomial
/// that clears its negative exponents and then treated as an ordinary
/// polynomial. The result is an ordinary polynomial (exponents >= 0), primitive,
/// with positive lowest-degree coefficient. Throws std::domain_error if both
/// inputs are zero.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Quotient q with a == b * q when it exists as a Laurent polynomial.
/// Throws std::domain_error if b is zero.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                              const LaurentPolynomial& b);

/// Sorted "c*g^e" terms in ascending exponent joined by " + "; "0" for zero.
std::string to_string(const LaurentPolynomial& p);

}  // namespace rigidity

#include <doctest.h>

#include <random>

#include "rigidity/rational_function.hpp"

using namespace rigidity;

namespace {

const LaurentPolynomial kOne(1);

RationalFunction inv_one_minus(Exponent k) { return RationalFunction(kOne, kOne - g_pow(k)); }

}  // namespace

TEST_CASE("pairing identity 1/(1-g^k) + 1/(1-g^-k) = 1") {
  for (Exponent k : {1, 2, 3, 7, -4}) {
    const auto sum = inv_one_minus(k) + inv_one_minus(-k);
    CHECK(sum == RationalFunction(1));
    REQUIRE(sum.constant_value().has_value());
    CHECK(*sum.constant_value() == 1);
  }
}

TEST_CASE("addition") {
  const auto p = RationalFunction(g_pow(2), kOne + g_pow(1));
  CHECK(p + RationalFunction() == p);
  CHECK(RationalFunction(g_pow(1), kOne - g_pow(1)) + inv_one_minus(1) ==
        RationalFunction(g_pow(1) + kOne, kOne - g_pow(1)));
  CHECK((p - p).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(inv_one_minus(1) * RationalFunction(kOne - g_pow(1)) == RationalFunction(1));
  const auto sq = inv_one_minus(1) * inv_one_minus(1);
  CHECK(sq.numerator() == kOne);
  CHECK(sq.denominator() == (kOne - g_pow(1)) * (kOne - g_pow(1)));
  const auto a = RationalFunction(kOne + g_pow(1), kOne - g_pow(1));
  const auto b = RationalFunction(kOne - g_pow(1), kOne + g_pow(1));
  CHECK(a * b == RationalFunction(1));
  CHECK(a / a == RationalFunction(1));
  CHECK_THROWS_AS(a / RationalFunction(), std::domain_error);
}

TEST_CASE("canonical form") {
  // 1/(1 - g^-1) = -g/(1 - g)
  const auto f = inv_one_minus(-1);
  CHECK(f.numerator() == -g_pow(1));
  CHECK(f.denominator() == kOne - g_pow(1));

  // Scaled and shifted presentations of the same function coincide.
  const auto base = RationalFunction(g_pow(-1) + LaurentPolynomial(3), kOne - g_pow(2));
  const auto scaled = RationalFunction((g_pow(-1) + LaurentPolynomial(3)).scaled(Rational(-5, 7)).shifted(4),
                                       (kOne - g_pow(2)).scaled(Rational(-5, 7)).shifted(4));
  CHECK(base == scaled);
  CHECK(base.denominator().min_exponent() == 0);
  CHECK(base.denominator().lowest_coefficient() > 0);

  CHECK(RationalFunction(LaurentPolynomial(), kOne - g_pow(3)) == RationalFunction());
  CHECK(RationalFunction().denominator() == kOne);
  CHECK_THROWS_AS(RationalFunction(kOne, LaurentPolynomial()), std::domain_error);

  // A constant rational scale lives in the numerator.
  const auto half = RationalFunction(kOne, LaurentPolynomial(2));
  CHECK(half.denominator() == kOne);
  CHECK(*half.constant_value() == Rational(1, 2));
}

TEST_CASE("re-canonicalizing is the identity") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-4, 4), expo(-5, 5), k(1, 4);
  for (int i = 0; i < 200; ++i) {
    LaurentPolynomial num, den(1);
    for (int t = 0; t < 3; ++t) num += LaurentPolynomial::monomial(coef(rng), expo(rng));
    den *= kOne - g_pow(k(rng));
    den *= LaurentPolynomial::monomial(coef(rng) == 0 ? 1 : coef(rng), expo(rng)) + g_pow(expo(rng));
    if (den.is_zero()) continue;
    const RationalFunction f(num, den);
    CHECK(RationalFunction(f.numerator(), f.denominator()) == f);
    CHECK(gcd(f.numerator().is_zero() ? kOne : f.numerator(), f.denominator()) == kOne);
  }
}

TEST_CASE("constancy predicate") {
  CHECK(*(inv_one_minus(1) + inv_one_minus(-1)).constant_value() == 1);
  CHECK_FALSE(RationalFunction(g_pow(1), kOne - g_pow(1)).constant_value().has_value());
  CHECK(*RationalFunction().constant_value() == 0);
  CHECK_FALSE(RationalFunction(g_pow(2)).constant_value().has_value());
}

TEST_CASE("limits at zero") {
  const auto f = RationalFunction(kOne + LaurentPolynomial::monomial(2, 1), kOne - g_pow(1));
  CHECK(f.limit_at_zero() == ExtendedValue::finite(1));
  CHECK(RationalFunction(g_pow(-1), kOne - g_pow(1)).limit_at_zero() == ExtendedValue::diverges());
  CHECK(RationalFunction(g_pow(1), kOne - g_pow(1)).limit_at_zero() == ExtendedValue::finite(0));
  CHECK(RationalFunction().limit_at_zero() == ExtendedValue::finite(0));
}

TEST_CASE("limits at infinity") {
  const auto f = RationalFunction(kOne + LaurentPolynomial::monomial(2, 1), kOne - g_pow(1));
  CHECK(f.limit_at_infinity() == ExtendedValue::finite(-2));
  CHECK(inv_one_minus(1).limit_at_infinity() == ExtendedValue::finite(0));
  CHECK(RationalFunction(g_pow(2), kOne - g_pow(1)).limit_at_infinity() == ExtendedValue::diverges());
}

TEST_CASE("constant functions have both limits equal to the constant") {
  for (long c : {-3L, 0L, 5L}) {
    const RationalFunction f(c);
    CHECK(f.limit_at_zero() == ExtendedValue::finite(c));
    CHECK(f.limit_at_infinity() == ExtendedValue::finite(c));
  }
}

TEST_CASE("evaluation") {
  CHECK(*inv_one_minus(1).evaluate(2) == -1);
  CHECK_FALSE(RationalFunction(kOne + g_pow(1), kOne - g_pow(1)).evaluate(1).has_value());
  CHECK(*RationalFunction(g_pow(-1)).evaluate(Rational(1, 2)) == 2);
  CHECK_THROWS_AS(inv_one_minus(1).evaluate(0), std::domain_error);
}

TEST_CASE("text form") {
  CHECK(to_string(RationalFunction(3)) == "3");
  CHECK(to_string(inv_one_minus(1)) == "(1)/(1 - g)");
  CHECK(to_string(ExtendedValue::diverges()) == "diverges");
  CHECK(to_string(ExtendedValue::finite(Rational(-1, 2))) == "-1/2");
}

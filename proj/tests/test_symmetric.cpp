#include <doctest.h>

#include <bit>
#include <random>

#include "rigidity/rational_function.hpp"
#include "rigidity/symmetric.hpp"

using namespace rigidity;

namespace {

// Sum over all p-subsets, by bitmask.
Rational subset_oracle(const std::vector<Rational>& v, int p) {
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << v.size()); ++mask) {
    if (std::popcount(mask) != p) continue;
    Rational prod = 1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (mask & (1u << j)) prod *= v[j];
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("elem_sym on monomials") {
  const std::vector<RationalFunction> gs{RationalFunction(g_pow(1)), RationalFunction(g_pow(2))};
  CHECK(elem_sym(gs, 1) == RationalFunction(g_pow(1) + g_pow(2)));
  CHECK(elem_sym(gs, 0) == RationalFunction(1));
  const std::vector<RationalFunction> three{RationalFunction(g_pow(-1)), RationalFunction(g_pow(1)),
                                            RationalFunction(1)};
  CHECK(elem_sym(three, 3) == RationalFunction(1));
  CHECK_THROWS_AS(elem_sym(three, 4), std::domain_error);
  CHECK_THROWS_AS(elem_sym(three, -1), std::domain_error);
  CHECK(elem_sym(std::vector<RationalFunction>{}, 0) == RationalFunction(1));
}

TEST_CASE("elem_sym matches subset enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> val(-6, 6), len(0, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = make_rational(val(rng), 1 + std::labs(val(rng)));
    const auto all = elem_sym_all(std::span<const Rational>(v));
    for (int p = 0; p <= static_cast<int>(v.size()); ++p) {
      CHECK(elem_sym(v, p) == subset_oracle(v, p));
      CHECK(all[static_cast<std::size_t>(p)] == subset_oracle(v, p));
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  for (long n = 0; n < 10; ++n) CHECK(binomial(n, 0) == 1);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("shift identity instances") {
  const std::vector<RationalFunction> ab{RationalFunction(g_pow(1)), RationalFunction(g_pow(3))};
  const RationalFunction a = ab[0], b = ab[1];
  CHECK(elem_sym_shift(ab, 1) == RationalFunction(2) + a + b);
  CHECK(elem_sym_shift(ab, 1) == (a + RationalFunction(1)) + (b + RationalFunction(1)));
  CHECK(elem_sym_shift(ab, 0) == RationalFunction(1));

  const std::vector<Rational> xyz{Rational(2), Rational(-3), Rational(1, 2)};
  const Rational full = (xyz[0] + 1) * (xyz[1] + 1) * (xyz[2] + 1);
  CHECK(elem_sym_shift(xyz, 3) == full);
  CHECK(elem_sym_shift(xyz, 3) ==
        1 + elem_sym(xyz, 1) + elem_sym(xyz, 2) + elem_sym(xyz, 3));
  CHECK_THROWS_AS(elem_sym_shift(xyz, 4), std::domain_error);
}

TEST_CASE("shift identity on random integer vectors") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> x, x1;
      for (int i = 0; i < n; ++i) {
        x.emplace_back(val(rng));
        x1.push_back(x.back() + 1);
      }
      for (int k = 0; k <= n; ++k) CHECK(elem_sym_shift(x, k) == elem_sym(x1, k));
    }
  }
}

TEST_CASE("generating function: sum_p e_p t^p = prod (1 + t v_i)") {
  // t is modelled by the Laurent indeterminate; coefficients are the values.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> val(-4, 4), len(1, 7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(len(rng)));
    for (auto& x : v) x = val(rng);
    LaurentPolynomial lhs, rhs(1);
    for (std::size_t p = 0; p <= v.size(); ++p)
      lhs += LaurentPolynomial::monomial(elem_sym(v, static_cast<long>(p)), static_cast<Exponent>(p));
    for (const auto& x : v) rhs *= LaurentPolynomial(1) + LaurentPolynomial::monomial(x, 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("e_i over n generic variables has C(n, i) monomials") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<LaurentPolynomial> xs;
    for (int j = 0; j < n; ++j) xs.push_back(g_pow(Exponent{1} << j));  // distinct subset sums
    for (int i = 0; i <= n; ++i) {
      CHECK(static_cast<long>(elem_sym(xs, i).size()) == binomial(n, i).get_si());
    }
  }
}

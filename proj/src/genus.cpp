#include "rigidity/genus.hpp"

#include <stdexcept>

#include "rigidity/symmetric.hpp"

namespace rigidity {

namespace {

// e_0..e_n of the monomials g^{k_j} and the product of (1 - g^{k_j}).
struct PointSeries {
  std::vector<LaurentPolynomial> elementary;
  LaurentPolynomial denominator;
};

PointSeries point_series(const FixedPoint& point) {
  std::vector<LaurentPolynomial> monomials;
  monomials.reserve(point.weights.size());
  LaurentPolynomial den(1);
  for (Weight k : point.weights) {
    monomials.push_back(g_pow(k));
    den *= LaurentPolynomial(1) - g_pow(k);
  }
  return {elem_sym_all(std::span<const LaurentPolynomial>(monomials)), std::move(den)};
}

void check_degree(long p, long n) {
  if (p < 0 || p > n) {
    throw std::domain_error("degree p = " + std::to_string(p) + " outside [0, " + std::to_string(n) + "]");
  }
}

Rational signed_power(const Rational& y0, long e) { return pow(Rational(-y0), e); }

}  // namespace

SumVerdict classify_sum(const RationalFunction& sum) {
  if (auto c = sum.constant_value()) {
    if (is_integer(*c)) return ConstantInteger{c->get_num()};
    return ConstantNonInteger{*c};
  }
  return NonConstant{sum};
}

std::string verdict_name(const SumVerdict& v) {
  switch (v.index()) {
    case 0: return "constant_integer";
    case 1: return "constant_non_integer";
    default: return "non_constant";
  }
}

RationalFunction localization_term(const FixedPoint& point, long p) {
  check_degree(p, static_cast<long>(point.weights.size()));
  PointSeries s = point_series(point);
  return RationalFunction(std::move(s.elementary[static_cast<std::size_t>(p)]), std::move(s.denominator));
}

std::vector<RationalFunction> localization_terms(const FixedPoint& point) {
  PointSeries s = point_series(point);
  std::vector<RationalFunction> out;
  out.reserve(s.elementary.size());
  for (auto& e : s.elementary) out.emplace_back(std::move(e), s.denominator);
  return out;
}

RationalFunction chi_p_sum(const FixedPointDatum& d, long p) {
  check_degree(p, d.n());
  RationalFunction total;
  for (const auto& point : d.points()) total += localization_term(point, p);
  return total;
}

std::vector<RationalFunction> chi_y_localization(const FixedPointDatum& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<RationalFunction> total(n + 1);
  for (const auto& point : d.points()) {
    // Polynomial in y with rational-function coefficients.
    std::vector<RationalFunction> product{RationalFunction(1)};
    for (Weight k : point.weights) {
      const RationalFunction constant_part(LaurentPolynomial(1), LaurentPolynomial(1) - g_pow(k));
      const RationalFunction linear_part(g_pow(k), LaurentPolynomial(1) - g_pow(k));
      std::vector<RationalFunction> next(product.size() + 1);
      for (std::size_t i = 0; i < product.size(); ++i) {
        next[i] += product[i] * constant_part;
        next[i + 1] += product[i] * linear_part;
      }
      product = std::move(next);
    }
    for (std::size_t p = 0; p <= n; ++p) total[p] += product[p];
  }
  return total;
}

ConstancyVerdict constancy_report(const FixedPointDatum& d) { return chi_profile(d).verdicts; }

std::vector<long> np_counts(const FixedPointDatum& d) {
  std::vector<long> np(static_cast<std::size_t>(d.n()) + 1, 0);
  for (int di : negative_counts(d)) ++np[static_cast<std::size_t>(di)];
  return np;
}

RelationsReport check_relations(int n, const std::vector<Integer>& chi, const std::vector<long>& np) {
  RelationsReport report;
  auto fail = [&](std::string msg) {
    report.holds = false;
    report.violations.push_back(std::move(msg));
  };
  const auto sign = [](long e) { return e % 2 == 0 ? 1 : -1; };
  for (int p = 0; p <= n; ++p) {
    const auto up = static_cast<std::size_t>(p);
    const auto uq = static_cast<std::size_t>(n - p);
    const Integer expected = sign(p) * np[up];
    if (chi[up] != expected) {
      fail("chi^" + std::to_string(p) + " = " + to_string(chi[up]) + " but (-1)^" + std::to_string(p) +
           " N_" + std::to_string(p) + " = " + to_string(expected));
    }
    if (np[up] != np[uq]) {
      fail("N_" + std::to_string(p) + " = " + std::to_string(np[up]) + " but N_" + std::to_string(n - p) +
           " = " + std::to_string(np[uq]));
    }
    const Integer dual = sign(n) * chi[uq];
    if (chi[up] != dual) {
      fail("chi^" + std::to_string(p) + " = " + to_string(chi[up]) + " but (-1)^" + std::to_string(n) +
           " chi^" + std::to_string(n - p) + " = " + to_string(dual));
    }
  }
  return report;
}

RelationsReport check_relations(const FixedPointDatum& d) {
  const ChiProfile profile = chi_profile(d);
  if (!profile.chi) throw std::domain_error("relations undefined for non-constant data");
  return check_relations(d.n(), *profile.chi, profile.np);
}

std::pair<Rational, Rational> limit_profile(const FixedPointDatum& d, const Rational& y0) {
  Rational at_zero = 0;
  Rational at_infinity = 0;
  for (int di : negative_counts(d)) {
    at_zero += signed_power(y0, di);
    at_infinity += signed_power(y0, d.n() - di);
  }
  return {at_zero, at_infinity};
}

std::pair<ExtendedValue, ExtendedValue> symbolic_limit_profile(const FixedPointDatum& d,
                                                              const Rational& y0) {
  Rational at_zero = 0;
  Rational at_infinity = 0;
  bool zero_finite = true;
  bool infinity_finite = true;
  for (const auto& point : d.points()) {
    RationalFunction product(1);
    for (Weight k : point.weights) {
      product *= RationalFunction(LaurentPolynomial(1) + LaurentPolynomial::monomial(y0, k),
                                  LaurentPolynomial(1) - g_pow(k));
    }
    const ExtendedValue lz = product.limit_at_zero();
    const ExtendedValue li = product.limit_at_infinity();
    if (lz.is_finite()) at_zero += lz.value(); else zero_finite = false;
    if (li.is_finite()) at_infinity += li.value(); else infinity_finite = false;
  }
  return {zero_finite ? ExtendedValue::finite(at_zero) : ExtendedValue::diverges(),
          infinity_finite ? ExtendedValue::finite(at_infinity) : ExtendedValue::diverges()};
}

RationalFunction reciprocal_sum(const FixedPointDatum& d) {
  RationalFunction total;
  for (const auto& [k, count] : weight_multiset(d)) {
    total += RationalFunction(LaurentPolynomial(count), LaurentPolynomial(1) - g_pow(k));
  }
  return total;
}

ChiProfile chi_profile(const FixedPointDatum& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<RationalFunction> sums(n + 1);
  for (const auto& point : d.points()) {
    const auto terms = localization_terms(point);
    for (std::size_t p = 0; p <= n; ++p) sums[p] += terms[p];
  }
  ChiProfile profile;
  profile.np = np_counts(d);
  std::vector<Integer> chi;
  bool all_integer = true;
  for (const auto& s : sums) {
    SumVerdict v = classify_sum(s);
    if (const auto* ci = std::get_if<ConstantInteger>(&v)) {
      chi.push_back(ci->value);
    } else {
      all_integer = false;
    }
    profile.verdicts.push_back(std::move(v));
  }
  if (all_integer) profile.chi = std::move(chi);
  return profile;
}

bool index_consistent(const ChiProfile& profile, int n) {
  return profile.chi && check_relations(n, *profile.chi, profile.np).holds;
}

std::optional<ChiProfile> consistent_profile(const FixedPointDatum& d) {
  const auto n = static_cast<std::size_t>(d.n());
  std::vector<PointSeries> series;
  series.reserve(d.m());
  for (const auto& point : d.points()) series.push_back(point_series(point));

  ChiProfile profile;
  profile.np = np_counts(d);
  std::vector<Integer> chi;
  for (std::size_t p = 0; p <= n; ++p) {
    RationalFunction sum;
    for (const auto& s : series) sum += RationalFunction(s.elementary[p], s.denominator);
    SumVerdict v = classify_sum(sum);
    const auto* ci = std::get_if<ConstantInteger>(&v);
    if (!ci) return std::nullopt;
    chi.push_back(ci->value);
    profile.verdicts.push_back(std::move(v));
  }
  if (!check_relations(d.n(), chi, profile.np).holds) return std::nullopt;
  profile.chi = std::move(chi);
  return profile;
}

}  // namespace rigidity

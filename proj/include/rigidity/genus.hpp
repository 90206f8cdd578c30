#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rigidity/datum.hpp"
#include "rigidity/rational_function.hpp"

namespace rigidity {

/// Verdict for one localization sum.
struct ConstantInteger {
  Integer value;
  friend bool operator==(const ConstantInteger&, const ConstantInteger&) = default;
};
struct ConstantNonInteger {
  Rational value;
  friend bool operator==(const ConstantNonInteger&, const ConstantNonInteger&) = default;
};
struct NonConstant {
  RationalFunction reduced;
  friend bool operator==(const NonConstant&, const NonConstant&) = default;
};
using SumVerdict = std::variant<ConstantInteger, ConstantNonInteger, NonConstant>;

/// One verdict per p = 0..n.
using ConstancyVerdict = std::vector<SumVerdict>;

SumVerdict classify_sum(const RationalFunction& sum);
std::string verdict_name(const SumVerdict& v);

/// e_p(g^{k_1}, ..., g^{k_n}) / prod_j (1 - g^{k_j}) for one fixed point.
RationalFunction localization_term(const FixedPoint& point, long p);

/// The same terms for every p = 0..n at once.
std::vector<RationalFunction> localization_terms(const FixedPoint& point);

/// Sum over all fixed points of localization_term(point, p).
RationalFunction chi_p_sum(const FixedPointDatum& d, long p);

/// Coefficients in y of sum_i prod_j (1 + y g^{k_j}) / (1 - g^{k_j}),
/// expanded factor by factor; entry p is the coefficient of y^p.
std::vector<RationalFunction> chi_y_localization(const FixedPointDatum& d);

ConstancyVerdict constancy_report(const FixedPointDatum& d);

/// N_p = number of fixed points with exactly p negative weights, p = 0..n.
std::vector<long> np_counts(const FixedPointDatum& d);

struct RelationsReport {
  bool holds = true;
  std::vector<std::string> violations;
};

/// Checks chi^p = (-1)^p N_p, N_p = N_{n-p} and chi^p = (-1)^n chi^{n-p}.
RelationsReport check_relations(int n, const std::vector<Integer>& chi, const std::vector<long>& np);

/// As above, computing chi from the datum. Throws std::domain_error
/// ("relations undefined for non-constant data") unless every sum is a
/// constant integer.
RelationsReport check_relations(const FixedPointDatum& d);

/// (sum_i (-y0)^{d_i}, sum_i (-y0)^{n - d_i}) from the negative-weight counts.
std::pair<Rational, Rational> limit_profile(const FixedPointDatum& d, const Rational& y0);

/// The same two limits taken symbolically: y is fixed to y0 and each point's
/// product is sent to g -> 0 and g -> infinity with rational-function limits.
std::pair<ExtendedValue, ExtendedValue> symbolic_limit_profile(const FixedPointDatum& d,
                                                              const Rational& y0);

/// sum_i sum_j 1 / (1 - g^{k_j^{(i)}}).
RationalFunction reciprocal_sum(const FixedPointDatum& d);

struct ChiProfile {
  /// Present only when every verdict is ConstantInteger.
  std::optional<std::vector<Integer>> chi;
  std::vector<long> np;
  ConstancyVerdict verdicts;
};

ChiProfile chi_profile(const FixedPointDatum& d);

/// Every sum is a constant integer and the relations hold. This is the
/// conjunction of necessary conditions for data coming from a manifold; it
/// does not assert that such a manifold exists.
bool index_consistent(const ChiProfile& profile, int n);

/// chi_profile restricted to index-consistent data, stopping at the first
/// failed sum. Returns nullopt for anything else.
std::optional<ChiProfile> consistent_profile(const FixedPointDatum& d);

}  // namespace rigidity

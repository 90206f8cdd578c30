#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rigidity/datum.hpp"
#include "rigidity/rational_function.hpp"

namespace rigidity {

/// The kernel operations exercised by the self-check. Defaults are the
/// library's own; tests swap in deliberately broken ones to confirm that the
/// suites notice.
struct SelfcheckKernel {
  std::function<LaurentPolynomial(const LaurentPolynomial&, const LaurentPolynomial&)> lp_mul;
  std::function<RationalFunction(const RationalFunction&, const RationalFunction&)> rf_add;
  std::function<RationalFunction(const RationalFunction&, const RationalFunction&)> rf_mul;
  std::function<Rational(const std::vector<Rational>&, long)> elem_sym;
  std::function<Rational(const std::vector<Rational>&, long)> elem_sym_shift;
  std::function<RationalFunction(const FixedPointDatum&, long)> chi_p_sum;

  static SelfcheckKernel library();
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;
};

struct SelfcheckResult {
  std::vector<SuiteResult> suites;
  bool passed() const;
  /// One line per suite plus a verdict line; identical for equal seeds.
  std::string summary() const;
};

/// Shift-identity, ring-law and constancy-oracle suites driven by a seeded
/// generator.
SelfcheckResult run_selfcheck(std::uint64_t seed, const SelfcheckKernel& kernel = SelfcheckKernel::library());

/// For every n in 1..max_n and `vectors` random integer vectors
/// with entries in [-5, 5], checks e_k(x + 1) against the binomial expansion
/// for every k.
SuiteResult shift_identity_suite(std::uint64_t seed, int max_n, int vectors, const SelfcheckKernel& kernel);

/// Associativity, commutativity and distributivity on random Laurent
/// polynomials and rational functions.
SuiteResult ring_law_suite(std::uint64_t seed, int cases, const SelfcheckKernel& kernel);

/// For random data, compares the exact constancy verdict of every chi^p sum
/// against direct evaluation of the unreduced sum at `points` random
/// rationals (never 0 or +-1, where the summands have poles).
SuiteResult constancy_oracle_suite(std::uint64_t seed, int data, int points, const SelfcheckKernel& kernel);

/// Exact value of sum_i e_p(x^{k_j}) / prod_j (1 - x^{k_j}) computed with
/// rationals only. x must avoid 0 and +-1.
Rational evaluate_localization_sum(const FixedPointDatum& d, long p, const Rational& x);

}  // namespace rigidity

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rigidity/datum.hpp"
#include "rigidity/genus.hpp"

namespace rigidity {

struct Hamiltonian {
  friend bool operator==(const Hamiltonian&, const Hamiltonian&) = default;
};
struct NonHamiltonian {
  friend bool operator==(const NonHamiltonian&, const NonHamiltonian&) = default;
};

enum class RealizabilityFailure { NonConstantSum, NonIntegerSum, ToddOutOfRange, RelationViolation };

/// The datum cannot come from a symplectic circle action with isolated
/// fixed points; `failure` names the check that ruled it out.
struct NotRealizable {
  RealizabilityFailure failure;
  long p = 0;
  std::string detail;
  friend bool operator==(const NotRealizable&, const NotRealizable&) = default;
};

using Classification = std::variant<Hamiltonian, NonHamiltonian, NotRealizable>;

std::string classification_name(const Classification& c);
std::string failure_name(RealizabilityFailure f);

/// Todd-genus criterion on the p = 0 localization sum: constant 1 means
/// Hamiltonian, constant 0 non-Hamiltonian, anything else not realizable.
Classification hamiltonian_status(const FixedPointDatum& d);
Classification classify_todd(const RationalFunction& todd_sum);

/// Full verdict from a profile: the first failed necessary condition
/// (non-constant or non-integer sum, relation violation) makes the datum
/// NotRealizable; otherwise the Todd-genus criterion decides.
Classification classify_profile(const ChiProfile& profile, int n);

struct SemifreeReport {
  bool holds = true;
  /// The p = 0 sum when it is constant.
  std::optional<Rational> todd;
  std::vector<long> np;
  std::vector<std::string> violations;
};

/// For a semifree datum (all weights +-1): the Todd genus must be 1 and
/// N_p = C(n, p). Throws std::domain_error for data that are not semifree.
SemifreeReport semifree_check(const FixedPointDatum& d);

/// k1 >= k2 >= k3 >= 1.
struct WeightTriple {
  Weight k1 = 1, k2 = 1, k3 = 1;
  friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
  friend auto operator<=>(const WeightTriple&, const WeightTriple&) = default;
};

/// Throws std::invalid_argument unless k1 >= k2 >= k3 >= 1.
WeightTriple make_weight_triple(Weight k1, Weight k2, Weight k3);

/// Tally of the eight sign patterns of (+-k1, +-k2, +-k3), stored in the
/// order N0, s1, s2, s3, t1, t2, t3, N3:
///   N0 (+,+,+)  s1 (-,+,+)  s2 (+,-,+)  s3 (+,+,-)
///   t1 (+,-,-)  t2 (-,+,-)  t3 (-,-,+)  N3 (-,-,-)
struct GodinhoStats {
  WeightTriple k;
  std::array<long, 8> counts{};

  long N0() const { return counts[0]; }
  long s1() const { return counts[1]; }
  long s2() const { return counts[2]; }
  long s3() const { return counts[3]; }
  long t1() const { return counts[4]; }
  long t2() const { return counts[5]; }
  long t3() const { return counts[6]; }
  long N3() const { return counts[7]; }
  long total() const;

  friend bool operator==(const GodinhoStats&, const GodinhoStats&) = default;
  friend auto operator<=>(const GodinhoStats&, const GodinhoStats&) = default;
};

/// A point whose weights fit none of the eight sign patterns.
class PatternError : public std::runtime_error {
 public:
  PatternError(std::size_t point_index, const std::string& what)
      : std::runtime_error(what), point_index_(point_index) {}
  std::size_t point_index() const { return point_index_; }

 private:
  std::size_t point_index_;
};

/// Tallies the points of an n = 3 datum by sign pattern. When patterns
/// coincide (repeated k values) the first match in the order above wins.
/// Throws std::domain_error if n != 3 and PatternError on a mismatch.
GodinhoStats godinho_stats(const FixedPointDatum& d, const WeightTriple& k);

/// Every distinct tally obtainable by assigning each point to any pattern
/// it matches.
std::vector<GodinhoStats> godinho_all_tallies(const FixedPointDatum& d, const WeightTriple& k);

struct GodinhoCase1 {
  friend bool operator==(const GodinhoCase1&, const GodinhoCase1&) = default;
};
struct GodinhoCase2 {
  friend bool operator==(const GodinhoCase2&, const GodinhoCase2&) = default;
};
struct GodinhoNeither {
  std::string witness;
  friend bool operator==(const GodinhoNeither&, const GodinhoNeither&) = default;
};
using GodinhoVerdict = std::variant<GodinhoCase1, GodinhoCase2, GodinhoNeither>;

std::string godinho_verdict_name(const GodinhoVerdict& v);

/// Verdict for a single tally:
///  Case 1: N0 = N3 = s2 = s3 = t2 = t3 = 0, s1 = t1 >= 1, k1 = k2 + k3
///          (non-Hamiltonian);
///  Case 2: N0 = N3 = 1 and
///          g^{k3} + g^{k2} + g^{k1} + t1 g^{k2+k3} + t2 g^{k1+k3} + t3 g^{k1+k2}
///        = s3 g^{k3} + s2 g^{k2} + s1 g^{k1} + g^{k2+k3} + g^{k1+k3} + g^{k1+k2}
///          (Hamiltonian).
GodinhoVerdict godinho_verdict(const GodinhoStats& stats);

/// godinho_verdict on `stats`, additionally requiring every alternative
/// tally of `d` to produce the same case; a disagreement is reported as
/// Neither with an ambiguity witness.
GodinhoVerdict godinho_classify(const GodinhoStats& stats, const FixedPointDatum& d);

/// N0 - (s1 g^{k1} + s2 g^{k2} + s3 g^{k3}) + (t1 g^{k2+k3} + t2 g^{k1+k3} + t3 g^{k1+k2})
///    - N3 g^{k1+k2+k3},
/// the numerator of the Todd sum over (1 - g^{k1})(1 - g^{k2})(1 - g^{k3}).
LaurentPolynomial godinho_todd_numerator(const GodinhoStats& stats);

/// (1 - g^{k1})(1 - g^{k2})(1 - g^{k3}).
LaurentPolynomial godinho_todd_denominator(const WeightTriple& k);

}  // namespace rigidity

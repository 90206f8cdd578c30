#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/rational.hpp"

namespace rigidity {

using Weight = Exponent;

/// Isotropy weights at one isolated fixed point. Order is not semantic.
struct FixedPoint {
  std::vector<Weight> weights;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  friend auto operator<=>(const FixedPoint&, const FixedPoint&) = default;
};

/// Half-dimension n together with the weights at each of the m >= 1 isolated
/// fixed points. Only produced by validate(), so the invariants (n >= 1,
/// m >= 1, n nonzero weights per point) always hold.
class FixedPointDatum {
 public:
  int n() const { return n_; }
  std::size_t m() const { return points_.size(); }
  const std::vector<FixedPoint>& points() const { return points_; }

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;
  friend auto operator<=>(const FixedPointDatum&, const FixedPointDatum&) = default;

 private:
  friend FixedPointDatum validate(long n, const std::vector<std::vector<Weight>>& points);
  int n_ = 0;
  std::vector<FixedPoint> points_;
};

enum class DatumErrorKind { InvalidDimension, EmptyFixedSet, DimensionMismatch, ZeroWeight, Malformed };

/// Rejected input. `field` is a JSON pointer to the offending value.
class DatumError : public std::runtime_error {
 public:
  DatumError(DatumErrorKind kind, std::string field, const std::string& detail);
  DatumErrorKind kind() const { return kind_; }
  const std::string& field() const { return field_; }

 private:
  DatumErrorKind kind_;
  std::string field_;
};

/// Checks the fixed-point hypotheses and builds a datum. Point and weight
/// order are preserved as given.
FixedPointDatum validate(long n, const std::vector<std::vector<Weight>>& points);

/// Parses {"n": ..., "fixed_points": [[...], ...]}. Unknown top-level keys
/// are accepted and reported through `unknown_fields`.
FixedPointDatum parse_datum(const nlohmann::json& doc, std::vector<std::string>* unknown_fields = nullptr);
FixedPointDatum parse_datum_file(const std::string& path, std::vector<std::string>* unknown_fields = nullptr);

nlohmann::json to_json(const FixedPointDatum& d);

/// Weights sorted within each point, points sorted lexicographically.
FixedPointDatum canonical_form(const FixedPointDatum& d);

/// Multiplicity of each weight value across all points and slots.
using WeightMultiset = std::map<Weight, long>;

WeightMultiset weight_multiset(const FixedPointDatum& d);

struct BalanceResult {
  bool balanced = true;
  /// Smallest k > 0 (by |k|) with count(k) != count(-k).
  std::optional<Weight> witness;
};

/// Whether every weight k occurs as often as -k.
BalanceResult balance_check(const FixedPointDatum& d);

/// Sum of all weights over all points.
Integer weight_sum(const FixedPointDatum& d);

/// Number of negative weights at each point, in point order.
std::vector<int> negative_counts(const FixedPointDatum& d);

bool is_semifree(const FixedPointDatum& d);

}  // namespace rigidity

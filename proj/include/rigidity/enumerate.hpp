#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/classify.hpp"
#include "rigidity/datum.hpp"
#include "rigidity/genus.hpp"

namespace rigidity {

/// Data with n weights per point, 1..max_points points and weights in
/// [-max_weight, max_weight] \ {0}.
struct SearchBounds {
  int n = 1;
  int max_points = 1;
  Weight max_weight = 1;
};

struct CensusEntry {
  FixedPointDatum datum;  // canonical form
  ChiProfile profile;
  Classification classification;
  bool balance = true;
  Integer weight_sum;
};

inline constexpr double kDefaultCostCeiling = 1e8;

struct EnumerateOptions {
  unsigned jobs = 1;
  /// Refuse bounds whose raw-shape estimate exceeds this; <= 0 disables.
  double cost_ceiling = kDefaultCostCeiling;
  /// Skip data that are not balanced and prune partial data whose weight
  /// multiset can no longer be balanced within the point budget. Turning it
  /// off yields the same census (balance is necessary) at much higher cost.
  bool prune_with_balance = true;
};

class CostCeilingExceeded : public std::runtime_error {
 public:
  CostCeilingExceeded(Integer estimate, double ceiling);
  const Integer& estimate() const { return estimate_; }

 private:
  Integer estimate_;
};

/// Raw shapes before symmetry reduction or pruning:
/// sum over m = 1..max_points of (2 max_weight)^(n m).
Integer estimated_cost(const SearchBounds& b);

/// All sorted weight vectors of length n, in lexicographic order.
std::vector<std::vector<Weight>> sorted_weight_vectors(int n, Weight max_weight);

/// Every index-consistent datum within the bounds, in canonical form and
/// sorted, each with its profile and classification. The result does not
/// depend on options.jobs. Throws std::invalid_argument for non-positive
/// bounds and CostCeilingExceeded when the estimate is over the ceiling.
std::vector<CensusEntry> enumerate_consistent(const SearchBounds& b, const EnumerateOptions& options = {});

/// Census record with fields datum, chi, np, classification, balance,
/// weight_sum.
nlohmann::json census_record(const CensusEntry& e);

/// One compact JSON record per line.
std::string census_text(const std::vector<CensusEntry>& entries);

/// Entry count per classification name.
std::map<std::string, long> census_summary(const std::vector<CensusEntry>& entries);

}  // namespace rigidity

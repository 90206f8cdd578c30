#pragma once

#include <vector>

#include "rigidity/datum.hpp"

namespace fixtures {

using rigidity::FixedPointDatum;
using rigidity::Weight;

inline FixedPointDatum s2() { return rigidity::validate(1, {{1}, {-1}}); }
inline FixedPointDatum cp2() { return rigidity::validate(2, {{1, 2}, {-1, 1}, {-2, -1}}); }
inline FixedPointDatum godinho() { return rigidity::validate(3, {{-2, 1, 1}, {2, -1, -1}}); }
inline FixedPointDatum cp3() {
  return rigidity::validate(3, {{1, 2, 3}, {-1, 1, 2}, {-2, -1, 1}, {-3, -2, -1}});
}
inline FixedPointDatum unbalanced() { return rigidity::validate(1, {{1}, {2}}); }

/// All 2^n sign vectors.
inline FixedPointDatum hypercube(int n) {
  std::vector<std::vector<Weight>> rows;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Weight> w;
    for (int j = 0; j < n; ++j) w.push_back((mask >> j) & 1u ? -1 : 1);
    rows.push_back(w);
  }
  return rigidity::validate(n, rows);
}

}  // namespace fixtures

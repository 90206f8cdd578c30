#pragma once

#include <json.hpp>

#include "rigidity/rational.hpp"

namespace rigidity {

/// JSON number when the value fits in a signed long, decimal string otherwise.
inline nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

}  // namespace rigidity

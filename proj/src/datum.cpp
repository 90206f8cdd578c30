#include "rigidity/datum.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace rigidity {

namespace {

// Keeps every exponent sum formed from a datum far inside int64.
constexpr Weight kMaxAbsWeight = 1'000'000'000;

std::string message_for(DatumErrorKind kind) {
  switch (kind) {
    case DatumErrorKind::InvalidDimension: return "invalid dimension";
    case DatumErrorKind::EmptyFixedSet: return "non-empty fixed set required";
    case DatumErrorKind::DimensionMismatch: return "dimension mismatch";
    case DatumErrorKind::ZeroWeight: return "isolated fixed point violated";
    case DatumErrorKind::Malformed: return "malformed input";
  }
  return "invalid datum";
}

std::string point_field(std::size_t i) { return "/fixed_points/" + std::to_string(i); }

}  // namespace

DatumError::DatumError(DatumErrorKind kind, std::string field, const std::string& detail)
    : std::runtime_error(message_for(kind) + " at " + (field.empty() ? "/" : field) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      field_(std::move(field)) {}

FixedPointDatum validate(long n, const std::vector<std::vector<Weight>>& points) {
  if (n <= 0 || n > std::numeric_limits<int>::max()) {
    throw DatumError(DatumErrorKind::InvalidDimension, "/n", "n = " + std::to_string(n));
  }
  if (points.empty()) throw DatumError(DatumErrorKind::EmptyFixedSet, "/fixed_points", "");
  FixedPointDatum d;
  d.n_ = static_cast<int>(n);
  d.points_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& w = points[i];
    if (static_cast<long>(w.size()) != n) {
      throw DatumError(DatumErrorKind::DimensionMismatch, point_field(i),
                       "expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) {
        throw DatumError(DatumErrorKind::ZeroWeight, point_field(i) + "/" + std::to_string(j),
                         "weight is zero");
      }
      if (w[j] > kMaxAbsWeight || w[j] < -kMaxAbsWeight) {
        throw DatumError(DatumErrorKind::Malformed, point_field(i) + "/" + std::to_string(j),
                         "weight magnitude exceeds " + std::to_string(kMaxAbsWeight));
      }
    }
    d.points_.push_back(FixedPoint{w});
  }
  return d;
}

FixedPointDatum parse_datum(const nlohmann::json& doc, std::vector<std::string>* unknown_fields) {
  if (!doc.is_object()) throw DatumError(DatumErrorKind::Malformed, "", "expected an object");
  if (unknown_fields) {
    for (const auto& [key, value] : doc.items()) {
      if (key != "n" && key != "fixed_points") unknown_fields->push_back(key);
    }
  }
  if (!doc.contains("n")) throw DatumError(DatumErrorKind::Malformed, "/n", "missing field");
  const auto& jn = doc["n"];
  if (!jn.is_number_integer()) throw DatumError(DatumErrorKind::Malformed, "/n", "expected an integer");
  const long n = jn.is_number_unsigned()
                     ? static_cast<long>(std::min<std::uint64_t>(jn.get<std::uint64_t>(),
                                                                 std::numeric_limits<long>::max()))
                     : jn.get<long>();

  if (!doc.contains("fixed_points")) {
    throw DatumError(DatumErrorKind::Malformed, "/fixed_points", "missing field");
  }
  const auto& jp = doc["fixed_points"];
  if (!jp.is_array()) throw DatumError(DatumErrorKind::Malformed, "/fixed_points", "expected an array");
  std::vector<std::vector<Weight>> points;
  points.reserve(jp.size());
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const auto& row = jp[i];
    if (!row.is_array()) throw DatumError(DatumErrorKind::Malformed, point_field(i), "expected an array");
    std::vector<Weight> w;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& x = row[j];
      const std::string field = point_field(i) + "/" + std::to_string(j);
      if (!x.is_number_integer()) throw DatumError(DatumErrorKind::Malformed, field, "expected an integer");
      if (x.is_number_unsigned() && x.get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxAbsWeight)) {
        throw DatumError(DatumErrorKind::Malformed, field,
                         "weight magnitude exceeds " + std::to_string(kMaxAbsWeight));
      }
      w.push_back(x.get<Weight>());
    }
    points.push_back(std::move(w));
  }
  return validate(n, points);
}

FixedPointDatum parse_datum_file(const std::string& path, std::vector<std::string>* unknown_fields) {
  std::ifstream in(path);
  if (!in) throw DatumError(DatumErrorKind::Malformed, "", "cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DatumError(DatumErrorKind::Malformed, "", e.what());
  }
  return parse_datum(doc, unknown_fields);
}

nlohmann::json to_json(const FixedPointDatum& d) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : d.points()) points.push_back(p.weights);
  return {{"n", d.n()}, {"fixed_points", std::move(points)}};
}

FixedPointDatum canonical_form(const FixedPointDatum& d) {
  std::vector<std::vector<Weight>> rows;
  rows.reserve(d.m());
  for (const auto& p : d.points()) {
    auto w = p.weights;
    std::sort(w.begin(), w.end());
    rows.push_back(std::move(w));
  }
  std::sort(rows.begin(), rows.end());
  return validate(d.n(), rows);
}

WeightMultiset weight_multiset(const FixedPointDatum& d) {
  WeightMultiset counts;
  for (const auto& p : d.points()) {
    for (Weight w : p.weights) ++counts[w];
  }
  return counts;
}

BalanceResult balance_check(const FixedPointDatum& d) {
  const WeightMultiset counts = weight_multiset(d);
  std::optional<Weight> witness;
  for (const auto& [k, c] : counts) {
    const Weight key = k < 0 ? -k : k;
    if (witness && *witness <= key) continue;
    auto it = counts.find(-k);
    const long mirrored = it == counts.end() ? 0 : it->second;
    if (mirrored != c) witness = key;
  }
  return {!witness.has_value(), witness};
}

Integer weight_sum(const FixedPointDatum& d) {
  Integer total = 0;
  for (const auto& p : d.points()) {
    for (Weight w : p.weights) total += static_cast<long>(w);
  }
  return total;
}

std::vector<int> negative_counts(const FixedPointDatum& d) {
  std::vector<int> out;
  out.reserve(d.m());
  for (const auto& p : d.points()) {
    out.push_back(static_cast<int>(std::count_if(p.weights.begin(), p.weights.end(),
                                                 [](Weight w) { return w < 0; })));
  }
  return out;
}

bool is_semifree(const FixedPointDatum& d) {
  return std::all_of(d.points().begin(), d.points().end(), [](const FixedPoint& p) {
    return std::all_of(p.weights.begin(), p.weights.end(), [](Weight w) { return w == 1 || w == -1; });
  });
}

}  // namespace rigidity

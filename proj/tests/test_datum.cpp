#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "rigidity/datum.hpp"

using namespace rigidity;
using nlohmann::json;

namespace {

DatumErrorKind error_kind(const json& doc) {
  try {
    parse_datum(doc);
  } catch (const DatumError& e) {
    return e.kind();
  }
  FAIL("expected a DatumError");
  return DatumErrorKind::Malformed;
}

}  // namespace

TEST_CASE("validation accepts and rejects") {
  const auto d = validate(1, {{1}, {-1}});
  CHECK(d.n() == 1);
  CHECK(d.m() == 2);

  CHECK(error_kind({{"n", 2}, {"fixed_points", {{1, 0}}}}) == DatumErrorKind::ZeroWeight);
  CHECK(error_kind({{"n", 3}, {"fixed_points", json::array()}}) == DatumErrorKind::EmptyFixedSet);
  CHECK(error_kind({{"n", 2}, {"fixed_points", {{1, 2}, {1}}}}) == DatumErrorKind::DimensionMismatch);
  CHECK(error_kind({{"n", 0}, {"fixed_points", {{1}}}}) == DatumErrorKind::InvalidDimension);
  CHECK(error_kind({{"n", -2}, {"fixed_points", {{1, 1}}}}) == DatumErrorKind::InvalidDimension);
  CHECK(error_kind({{"n", "two"}, {"fixed_points", {{1, 1}}}}) == DatumErrorKind::Malformed);
  CHECK(error_kind({{"n", 1}, {"fixed_points", {{1.5}}}}) == DatumErrorKind::Malformed);
  CHECK(error_kind({{"n", 1}}) == DatumErrorKind::Malformed);
  CHECK(error_kind(json::array()) == DatumErrorKind::Malformed);
}

TEST_CASE("error messages point at the offending field") {
  try {
    parse_datum({{"n", 2}, {"fixed_points", {{1, 2}, {3, 0}}}});
    FAIL("no error");
  } catch (const DatumError& e) {
    CHECK(e.field() == "/fixed_points/1/1");
    CHECK(std::string(e.what()).find("isolated fixed point violated") != std::string::npos);
  }
  try {
    parse_datum({{"n", 3}, {"fixed_points", json::array()}});
  } catch (const DatumError& e) {
    CHECK(std::string(e.what()).find("non-empty fixed set required") != std::string::npos);
  }
}

TEST_CASE("unknown fields are reported, not fatal") {
  std::vector<std::string> unknown;
  const auto d = parse_datum({{"n", 1}, {"fixed_points", {{1}, {-1}}}, {"name", "S2"}, {"zz", 1}}, &unknown);
  CHECK(d == fixtures::s2());
  CHECK(unknown == std::vector<std::string>{"name", "zz"});
}

TEST_CASE("weight multiset") {
  CHECK(weight_multiset(fixtures::cp2()) == WeightMultiset{{1, 2}, {2, 1}, {-1, 2}, {-2, 1}});
  CHECK(weight_multiset(validate(1, {{5}, {-5}})) == WeightMultiset{{5, 1}, {-5, 1}});
  CHECK(weight_multiset(fixtures::hypercube(2)) == WeightMultiset{{1, 4}, {-1, 4}});
}

TEST_CASE("balance") {
  CHECK(balance_check(fixtures::cp2()).balanced);
  const auto bad = balance_check(fixtures::unbalanced());
  CHECK_FALSE(bad.balanced);
  REQUIRE(bad.witness.has_value());
  CHECK(*bad.witness == 1);
  CHECK(balance_check(fixtures::godinho()).balanced);
  CHECK(*balance_check(validate(2, {{3, 3}, {-3, 2}})).witness == 2);
}

TEST_CASE("weight sum") {
  CHECK(weight_sum(fixtures::cp2()) == 0);
  CHECK(weight_sum(validate(1, {{3}})) == 3);
  CHECK(weight_sum(fixtures::godinho()) == 0);
}

TEST_CASE("negative counts") {
  CHECK(negative_counts(fixtures::cp2()) == std::vector<int>{0, 1, 2});
  CHECK(negative_counts(validate(2, {{4, 1}})) == std::vector<int>{0});
  CHECK(negative_counts(validate(3, {{-1, -1, -1}})) == std::vector<int>{3});
}

TEST_CASE("semifree") {
  CHECK(is_semifree(fixtures::hypercube(2)));
  CHECK_FALSE(is_semifree(fixtures::cp2()));
  CHECK(is_semifree(fixtures::s2()));
}

TEST_CASE("canonical form") {
  const auto d = validate(2, {{2, 1}, {-1, -2}});
  CHECK(canonical_form(d) == validate(2, {{-2, -1}, {1, 2}}));
  CHECK(canonical_form(canonical_form(d)) == canonical_form(d));
}

TEST_CASE("properties on random data") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dim(1, 4), pts(1, 6), w(1, 5), sign(0, 1);
  for (int i = 0; i < 200; ++i) {
    const long n = dim(rng), m = pts(rng);
    std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(m));
    for (auto& r : rows)
      for (long j = 0; j < n; ++j) r.push_back(sign(rng) ? w(rng) : -w(rng));
    const auto d = validate(n, rows);

    long mass = 0;
    for (const auto& [k, c] : weight_multiset(d)) mass += c;
    CHECK(mass == n * m);
    if (balance_check(d).balanced) CHECK(weight_sum(d) == 0);

    auto shuffled = rows;
    for (auto& r : shuffled) std::shuffle(r.begin(), r.end(), rng);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto d2 = validate(n, shuffled);
    CHECK(canonical_form(d2) == canonical_form(d));
    auto a = negative_counts(d), b = negative_counts(d2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);

    CHECK(parse_datum(json::parse(to_json(d).dump())) == d);
  }
}

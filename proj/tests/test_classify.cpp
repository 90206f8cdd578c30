#include <doctest.h>

#include "fixtures.hpp"
#include "rigidity/classify.hpp"

using namespace rigidity;

TEST_CASE("Todd-genus criterion") {
  CHECK(std::holds_alternative<Hamiltonian>(hamiltonian_status(fixtures::s2())));
  CHECK(std::holds_alternative<NonHamiltonian>(hamiltonian_status(fixtures::godinho())));
  const auto bad = hamiltonian_status(fixtures::unbalanced());
  REQUIRE(std::holds_alternative<NotRealizable>(bad));
  CHECK(std::get<NotRealizable>(bad).failure == RealizabilityFailure::NonConstantSum);
  CHECK(classification_name(bad) == "NotRealizable");

  // Two copies of S^2's data: chi^0 = 2.
  const auto twice = hamiltonian_status(validate(1, {{1}, {-1}, {1}, {-1}}));
  REQUIRE(std::holds_alternative<NotRealizable>(twice));
  CHECK(std::get<NotRealizable>(twice).failure == RealizabilityFailure::ToddOutOfRange);
  CHECK(std::holds_alternative<NotRealizable>(classify_todd(RationalFunction(make_rational(1, 2)))));
}

TEST_CASE("full classification from a profile") {
  const auto d = validate(2, {{1, 1}, {1, -1}, {-1, 1}});
  const auto c = classify_profile(chi_profile(d), d.n());
  REQUIRE(std::holds_alternative<NotRealizable>(c));
  CHECK(std::get<NotRealizable>(c).failure == RealizabilityFailure::NonConstantSum);
  CHECK(std::get<NotRealizable>(c).p == 0);
  CHECK(std::holds_alternative<Hamiltonian>(classify_profile(chi_profile(fixtures::cp2()), 2)));
}

TEST_CASE("semifree check") {
  const auto c2 = semifree_check(fixtures::hypercube(2));
  CHECK(c2.holds);
  CHECK(c2.np == std::vector<long>{1, 2, 1});
  CHECK(*c2.todd == 1);

  const auto c3 = semifree_check(fixtures::hypercube(3));
  CHECK(c3.holds);
  CHECK(c3.np == std::vector<long>{1, 3, 3, 1});

  const auto doubled = semifree_check(validate(1, {{1}, {1}}));
  CHECK_FALSE(doubled.holds);
  CHECK_FALSE(doubled.todd.has_value());
  CHECK(doubled.violations.front().find("not constant") != std::string::npos);

  CHECK_THROWS_AS(semifree_check(fixtures::cp2()), std::domain_error);
}

TEST_CASE("weight triples") {
  CHECK(make_weight_triple(2, 1, 1) == WeightTriple{2, 1, 1});
  CHECK_THROWS_AS(make_weight_triple(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_weight_triple(2, 1, 0), std::invalid_argument);
}

TEST_CASE("sign-pattern tally") {
  const auto s = godinho_stats(fixtures::godinho(), {2, 1, 1});
  CHECK(s.counts == std::array<long, 8>{0, 1, 0, 0, 1, 0, 0, 0});
  CHECK(s.total() == 2);

  const auto cube = godinho_stats(fixtures::hypercube(3), {1, 1, 1});
  CHECK(cube.N0() == 1);
  CHECK(cube.N3() == 1);
  CHECK(cube.s1() + cube.s2() + cube.s3() == 3);
  CHECK(cube.t1() + cube.t2() + cube.t3() == 3);
  CHECK(cube.s1() == 3);  // first match wins
  CHECK(cube.t1() == 3);

  const auto off = validate(3, {{3, 1, 1}, {-2, 1, 1}});
  try {
    godinho_stats(off, {2, 1, 1});
    FAIL("expected PatternError");
  } catch (const PatternError& e) {
    CHECK(e.point_index() == 0);
    CHECK(std::string(e.what()).find("not of the prescribed form") != std::string::npos);
  }
  CHECK_THROWS_AS(godinho_stats(fixtures::cp2(), {2, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(godinho_stats(fixtures::cp3(), {3, 2, 1}), PatternError);
}

TEST_CASE("all tallies under ambiguous patterns") {
  const auto tallies = godinho_all_tallies(fixtures::hypercube(3), {1, 1, 1});
  // 3 points split over s1..s3 and 3 over t1..t3: C(5,2)^2 ways.
  CHECK(tallies.size() == 100);
  CHECK(godinho_all_tallies(fixtures::godinho(), {2, 1, 1}).size() == 1);
}

TEST_CASE("two-case verdicts") {
  const auto g = fixtures::godinho();
  const auto s = godinho_stats(g, {2, 1, 1});
  CHECK(std::holds_alternative<GodinhoCase1>(godinho_classify(s, g)));

  const auto cube = fixtures::hypercube(3);
  CHECK(std::holds_alternative<GodinhoCase2>(godinho_classify(godinho_stats(cube, {1, 1, 1}), cube)));

  // Case 1 arithmetic fails without k1 = k2 + k3.
  const auto g3 = validate(3, {{-3, 1, 1}, {3, -1, -1}});
  const auto v = godinho_classify(godinho_stats(g3, {3, 1, 1}), g3);
  REQUIRE(std::holds_alternative<GodinhoNeither>(v));
  CHECK(std::get<GodinhoNeither>(v).witness.find("k1 = k2 + k3") != std::string::npos);
  CHECK(std::holds_alternative<NotRealizable>(hamiltonian_status(g3)));
}

TEST_CASE("Todd numerator") {
  const auto g = fixtures::godinho();
  const auto s = godinho_stats(g, {2, 1, 1});
  CHECK(godinho_todd_numerator(s).is_zero());

  GodinhoStats only_n0{{2, 1, 1}, {1, 0, 0, 0, 0, 0, 0, 0}};
  CHECK(godinho_todd_numerator(only_n0) == LaurentPolynomial(1));

  const auto cube = fixtures::hypercube(3);
  const auto cs = godinho_stats(cube, {1, 1, 1});
  CHECK(godinho_todd_numerator(cs) == godinho_todd_denominator(cs.k));

  for (const auto& d : {g, cube, validate(3, {{-3, 1, 2}, {3, -1, -2}, {1, 2, 3}}), validate(3, {{-2, 1, 1}})}) {
    const auto k = d == cube ? WeightTriple{1, 1, 1}
                   : d.points()[0].weights[0] == -3 ? WeightTriple{3, 2, 1}
                                                     : WeightTriple{2, 1, 1};
    const auto st = godinho_stats(d, k);
    CHECK(RationalFunction(godinho_todd_numerator(st), godinho_todd_denominator(k)) == chi_p_sum(d, 0));
  }
}

TEST_CASE("case 2 tallies produce the product numerator") {
  // Toric-style six-dimensional data with k = (3, 2, 1): the product of
  // three spheres with weights 3, 2, 1.
  std::vector<std::vector<Weight>> rows;
  for (Weight a : {3, -3})
    for (Weight b : {2, -2})
      for (Weight c : {1, -1}) rows.push_back({a, b, c});
  const auto d = validate(3, rows);
  const auto s = godinho_stats(d, {3, 2, 1});
  CHECK(std::holds_alternative<GodinhoCase2>(godinho_classify(s, d)));
  CHECK(godinho_todd_numerator(s) == godinho_todd_denominator(s.k));
  CHECK(std::holds_alternative<Hamiltonian>(hamiltonian_status(d)));
}

#include "rigidity/selfcheck.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "rigidity/genus.hpp"
#include "rigidity/symmetric.hpp"

namespace rigidity {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Weight nonzero_weight(Rng& rng, Weight bound) {
  const Weight w = uniform(rng, 1, bound);
  return uniform(rng, 0, 1) ? w : -w;
}

Rational small_rational(Rng& rng) {
  long num = uniform(rng, -9, 9);
  if (num == 0) num = 1;
  return make_rational(num, uniform(rng, 1, 4));
}

LaurentPolynomial random_laurent(Rng& rng) {
  LaurentPolynomial p;
  const long terms = uniform(rng, 1, 5);
  for (long i = 0; i < terms; ++i) p += LaurentPolynomial::monomial(small_rational(rng), uniform(rng, -6, 6));
  return p;
}

RationalFunction random_rational_function(Rng& rng) {
  LaurentPolynomial den(1);
  const long factors = uniform(rng, 0, 3);
  for (long i = 0; i < factors; ++i) den *= LaurentPolynomial(1) - g_pow(nonzero_weight(rng, 4));
  if (uniform(rng, 0, 1)) den *= random_laurent(rng);
  if (den.is_zero()) den = LaurentPolynomial(1);
  return RationalFunction(random_laurent(rng), den);
}

// Points of the product of two data: every concatenation of a point of a
// with a point of b.
std::vector<std::vector<Weight>> product(const std::vector<std::vector<Weight>>& a,
                                         const std::vector<std::vector<Weight>>& b) {
  std::vector<std::vector<Weight>> out;
  for (const auto& pa : a) {
    for (const auto& pb : b) {
      auto w = pa;
      w.insert(w.end(), pb.begin(), pb.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

// Random datum: either arbitrary weights, or a product of sphere,
// projective-plane and six-dimensional mirror data with scaled weights.
FixedPointDatum random_datum(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) {
    const long n = uniform(rng, 1, 3);
    const long m = uniform(rng, 1, 4);
    std::vector<std::vector<Weight>> rows(static_cast<std::size_t>(m));
    for (auto& row : rows) {
      for (long j = 0; j < n; ++j) row.push_back(nonzero_weight(rng, 3));
    }
    return validate(n, rows);
  }
  std::vector<std::vector<Weight>> rows{{}};
  long n = 0;
  const long target = uniform(rng, 1, 4);
  while (n < target) {
    const Weight c = uniform(rng, 1, 3);
    const long kind = uniform(rng, 0, 2);
    if (kind == 1 && n + 2 <= target) {
      rows = product(rows, {{c, 2 * c}, {-c, c}, {-2 * c, -c}});
      n += 2;
    } else if (kind == 2 && n + 3 <= target) {
      rows = product(rows, {{-2 * c, c, c}, {2 * c, -c, -c}});
      n += 3;
    } else {
      rows = product(rows, {{c}, {-c}});
      n += 1;
    }
  }
  return validate(n, rows);
}

std::vector<Rational> sample_points(Rng& rng, int count) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    const long num = uniform(rng, -30, 30);
    const long den = uniform(rng, 1, 30);
    if (num == 0) continue;
    const Rational x = make_rational(num, den);
    if (x == 1 || x == -1 || !seen.insert(x).second) continue;
    out.push_back(x);
  }
  return out;
}

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) {
    if (r.failures == 0) r.first_failure = what;
    ++r.failures;
  }
}

}  // namespace

SelfcheckKernel SelfcheckKernel::library() {
  SelfcheckKernel k;
  k.lp_mul = [](const LaurentPolynomial& a, const LaurentPolynomial& b) { return a * b; };
  k.rf_add = [](const RationalFunction& a, const RationalFunction& b) { return a + b; };
  k.rf_mul = [](const RationalFunction& a, const RationalFunction& b) { return a * b; };
  k.elem_sym = [](const std::vector<Rational>& v, long p) { return rigidity::elem_sym(v, p); };
  k.elem_sym_shift = [](const std::vector<Rational>& v, long p) { return rigidity::elem_sym_shift(v, p); };
  k.chi_p_sum = [](const FixedPointDatum& d, long p) { return rigidity::chi_p_sum(d, p); };
  return k;
}

bool SelfcheckResult::passed() const {
  for (const auto& s : suites) {
    if (s.failures != 0) return false;
  }
  return true;
}

std::string SelfcheckResult::summary() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, " << s.failures
        << " failures";
    if (s.failures != 0) out << " (first: " << s.first_failure << ")";
    out << "\n";
  }
  out << (passed() ? "selfcheck passed" : "selfcheck FAILED") << "\n";
  return out.str();
}

Rational evaluate_localization_sum(const FixedPointDatum& d, long p, const Rational& x) {
  Rational total = 0;
  for (const auto& point : d.points()) {
    const auto& w = point.weights;
    std::vector<Rational> powers;
    Rational den = 1;
    for (Weight k : w) {
      powers.push_back(pow(x, k));
      den *= 1 - powers.back();
    }
    // e_p by brute force over subsets.
    Rational num = 0;
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      if (std::popcount(mask) != p) continue;
      Rational term = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (1ul << j)) term *= powers[j];
      }
      num += term;
    }
    total += num / den;
  }
  return total;
}

SuiteResult shift_identity_suite(std::uint64_t seed, int max_n, int vectors, const SelfcheckKernel& kernel) {
  SuiteResult r{"shift_identity", 0, 0, {}};
  Rng rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    for (int v = 0; v < vectors; ++v) {
      std::vector<Rational> x, x_plus_one;
      for (int i = 0; i < n; ++i) {
        x.emplace_back(uniform(rng, -5, 5));
        x_plus_one.push_back(x.back() + 1);
      }
      for (long k = 0; k <= n; ++k) {
        record(r, kernel.elem_sym_shift(x, k) == kernel.elem_sym(x_plus_one, k),
               "n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  return r;
}

SuiteResult ring_law_suite(std::uint64_t seed, int cases, const SelfcheckKernel& kernel) {
  SuiteResult r{"ring_laws", 0, 0, {}};
  Rng rng(seed);
  const auto& mul = kernel.lp_mul;
  for (int i = 0; i < cases; ++i) {
    const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    const std::string tag = "laurent case " + std::to_string(i);
    record(r, (a + b) + c == a + (b + c), tag + " add assoc");
    record(r, a + b == b + a, tag + " add comm");
    record(r, mul(mul(a, b), c) == mul(a, mul(b, c)), tag + " mul assoc");
    record(r, mul(a, b) == mul(b, a), tag + " mul comm");
    record(r, mul(a, b + c) == mul(a, b) + mul(a, c), tag + " distributivity");
  }
  const auto& add = kernel.rf_add;
  const auto& rmul = kernel.rf_mul;
  for (int i = 0; i < cases; ++i) {
    const auto a = random_rational_function(rng), b = random_rational_function(rng),
               c = random_rational_function(rng);
    const std::string tag = "rational-function case " + std::to_string(i);
    record(r, add(add(a, b), c) == add(a, add(b, c)), tag + " add assoc");
    record(r, add(a, b) == add(b, a), tag + " add comm");
    record(r, rmul(rmul(a, b), c) == rmul(a, rmul(b, c)), tag + " mul assoc");
    record(r, rmul(a, b) == rmul(b, a), tag + " mul comm");
    record(r, rmul(a, add(b, c)) == add(rmul(a, b), rmul(a, c)), tag + " distributivity");
  }
  return r;
}

SuiteResult constancy_oracle_suite(std::uint64_t seed, int data, int points, const SelfcheckKernel& kernel) {
  SuiteResult r{"constancy_oracle", 0, 0, {}};
  Rng rng(seed);
  for (int i = 0; i < data; ++i) {
    const FixedPointDatum d = random_datum(rng);
    const auto xs = sample_points(rng, points);
    for (long p = 0; p <= d.n(); ++p) {
      const RationalFunction sum = kernel.chi_p_sum(d, p);
      const auto constant = sum.constant_value();
      std::vector<Rational> values;
      values.reserve(xs.size());
      for (const auto& x : xs) values.push_back(evaluate_localization_sum(d, p, x));
      bool agree;
      if (constant) {
        agree = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == *constant; });
      } else {
        agree = std::any_of(values.begin(), values.end(), [&](const Rational& v) { return v != values.front(); });
        for (std::size_t j = 0; agree && j < xs.size(); ++j) {
          const auto reduced = sum.evaluate(xs[j]);
          agree = reduced && *reduced == values[j];
        }
      }
      record(r, agree, "datum " + to_json(d).dump() + " p=" + std::to_string(p));
    }
  }
  return r;
}

SelfcheckResult run_selfcheck(std::uint64_t seed, const SelfcheckKernel& kernel) {
  SelfcheckResult result;
  result.suites.push_back(shift_identity_suite(seed, 8, 100, kernel));
  result.suites.push_back(ring_law_suite(seed + 1, 100, kernel));
  result.suites.push_back(constancy_oracle_suite(seed + 2, 200, 20, kernel));
  return result;
}

}  // namespace rigidity

#include "rigidity/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rigidity/symmetric.hpp"

namespace rigidity {

namespace {

constexpr std::array<const char*, 8> kPatternNames = {"N0", "s1", "s2", "s3", "t1", "t2", "t3", "N3"};

// Sign of (k1, k2, k3) in each pattern, in tally order.
constexpr std::array<std::array<int, 3>, 8> kPatternSigns = {{
    {+1, +1, +1},
    {-1, +1, +1},
    {+1, -1, +1},
    {+1, +1, -1},
    {+1, -1, -1},
    {-1, +1, -1},
    {-1, -1, +1},
    {-1, -1, -1},
}};

std::array<std::vector<Weight>, 8> sorted_patterns(const WeightTriple& k) {
  std::array<std::vector<Weight>, 8> out;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& s = kPatternSigns[i];
    out[i] = {s[0] * k.k1, s[1] * k.k2, s[2] * k.k3};
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

std::string render_weights(const std::vector<Weight>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::vector<std::size_t> matching_patterns(const std::vector<Weight>& sorted_weights,
                                           const std::array<std::vector<Weight>, 8>& patterns) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 8; ++i) {
    if (patterns[i] == sorted_weights) out.push_back(i);
  }
  return out;
}

void require_three(const FixedPointDatum& d) {
  if (d.n() != 3) throw std::domain_error("six-dimensional classification needs n = 3, got n = " +
                                          std::to_string(d.n()));
}

// Calls visit(parts) for every way of writing `total` as an ordered sum of
// parts.size() nonnegative integers.
template <typename Visit>
void for_each_composition(long total, std::vector<long>& parts, std::size_t slot, Visit&& visit) {
  if (slot + 1 == parts.size()) {
    parts[slot] = total;
    visit(parts);
    return;
  }
  for (long x = 0; x <= total; ++x) {
    parts[slot] = x;
    for_each_composition(total - x, parts, slot + 1, visit);
  }
}

std::optional<std::string> case1_failure(const GodinhoStats& s) {
  if (s.N0() != 0) return "case 1 needs N0 = 0";
  if (s.N3() != 0) return "case 1 needs N3 = 0";
  if (s.s2() != 0) return "case 1 needs s2 = 0";
  if (s.s3() != 0) return "case 1 needs s3 = 0";
  if (s.t2() != 0) return "case 1 needs t2 = 0";
  if (s.t3() != 0) return "case 1 needs t3 = 0";
  if (s.s1() != s.t1()) return "case 1 needs s1 = t1";
  if (s.s1() < 1) return "case 1 needs s1 >= 1";
  if (s.k.k1 != s.k.k2 + s.k.k3) return "case 1 needs k1 = k2 + k3";
  return std::nullopt;
}

std::optional<std::string> case2_failure(const GodinhoStats& s) {
  if (s.N0() != 1) return "case 2 needs N0 = 1";
  if (s.N3() != 1) return "case 2 needs N3 = 1";
  const auto& k = s.k;
  const LaurentPolynomial lhs = g_pow(k.k3) + g_pow(k.k2) + g_pow(k.k1) +
                                LaurentPolynomial::monomial(s.t1(), k.k2 + k.k3) +
                                LaurentPolynomial::monomial(s.t2(), k.k1 + k.k3) +
                                LaurentPolynomial::monomial(s.t3(), k.k1 + k.k2);
  const LaurentPolynomial rhs = LaurentPolynomial::monomial(s.s3(), k.k3) +
                                LaurentPolynomial::monomial(s.s2(), k.k2) +
                                LaurentPolynomial::monomial(s.s1(), k.k1) + g_pow(k.k2 + k.k3) +
                                g_pow(k.k1 + k.k3) + g_pow(k.k1 + k.k2);
  if (!(lhs == rhs)) {
    return "case 2 identity fails: " + to_string(lhs) + " != " + to_string(rhs);
  }
  return std::nullopt;
}

std::string render_stats(const GodinhoStats& s) {
  std::string out;
  for (std::size_t i = 0; i < 8; ++i) {
    out += (i ? " " : "") + std::string(kPatternNames[i]) + "=" + std::to_string(s.counts[i]);
  }
  return out;
}

}  // namespace

std::string classification_name(const Classification& c) {
  switch (c.index()) {
    case 0: return "Hamiltonian";
    case 1: return "NonHamiltonian";
    default: return "NotRealizable";
  }
}

std::string failure_name(RealizabilityFailure f) {
  switch (f) {
    case RealizabilityFailure::NonConstantSum: return "non_constant";
    case RealizabilityFailure::NonIntegerSum: return "non_integer";
    case RealizabilityFailure::ToddOutOfRange: return "todd_out_of_range";
    case RealizabilityFailure::RelationViolation: return "relation_violation";
  }
  return "unknown";
}

Classification classify_todd(const RationalFunction& todd_sum) {
  const auto value = todd_sum.constant_value();
  if (!value) {
    return NotRealizable{RealizabilityFailure::NonConstantSum, 0, "chi^0 = " + to_string(todd_sum)};
  }
  if (!is_integer(*value)) {
    return NotRealizable{RealizabilityFailure::NonIntegerSum, 0, "chi^0 = " + to_string(*value)};
  }
  if (*value == 1) return Hamiltonian{};
  if (*value == 0) return NonHamiltonian{};
  return NotRealizable{RealizabilityFailure::ToddOutOfRange, 0,
                       "chi^0 = " + to_string(*value) + " is neither 0 nor 1"};
}

Classification classify_profile(const ChiProfile& profile, int n) {
  for (std::size_t p = 0; p < profile.verdicts.size(); ++p) {
    const auto& v = profile.verdicts[p];
    if (const auto* nc = std::get_if<NonConstant>(&v)) {
      return NotRealizable{RealizabilityFailure::NonConstantSum, static_cast<long>(p),
                           "chi^" + std::to_string(p) + " = " + to_string(nc->reduced)};
    }
    if (const auto* ni = std::get_if<ConstantNonInteger>(&v)) {
      return NotRealizable{RealizabilityFailure::NonIntegerSum, static_cast<long>(p),
                           "chi^" + std::to_string(p) + " = " + to_string(ni->value)};
    }
  }
  const auto relations = check_relations(n, *profile.chi, profile.np);
  if (!relations.holds) {
    return NotRealizable{RealizabilityFailure::RelationViolation, 0, relations.violations.front()};
  }
  return classify_todd(RationalFunction(Rational(profile.chi->front())));
}

Classification hamiltonian_status(const FixedPointDatum& d) { return classify_todd(chi_p_sum(d, 0)); }

SemifreeReport semifree_check(const FixedPointDatum& d) {
  if (!is_semifree(d)) throw std::domain_error("semifree check on a datum with weights other than +-1");
  SemifreeReport report;
  const RationalFunction todd = chi_p_sum(d, 0);
  report.todd = todd.constant_value();
  report.np = np_counts(d);
  if (!report.todd) {
    report.violations.push_back("chi^0 = " + to_string(todd) + " is not constant");
  } else if (*report.todd != 1) {
    report.violations.push_back("chi^0 = " + to_string(*report.todd) + " but a semifree action has chi^0 = 1");
  }
  for (int p = 0; p <= d.n(); ++p) {
    const Integer expected = binomial(d.n(), p);
    if (expected != report.np[static_cast<std::size_t>(p)]) {
      report.violations.push_back("N_" + std::to_string(p) + " = " +
                                  std::to_string(report.np[static_cast<std::size_t>(p)]) + " but C(" +
                                  std::to_string(d.n()) + "," + std::to_string(p) + ") = " +
                                  to_string(expected));
    }
  }
  report.holds = report.violations.empty();
  return report;
}

WeightTriple make_weight_triple(Weight k1, Weight k2, Weight k3) {
  if (!(k1 >= k2 && k2 >= k3 && k3 >= 1)) {
    throw std::invalid_argument("weight triple must satisfy k1 >= k2 >= k3 >= 1, got (" + std::to_string(k1) +
                                "," + std::to_string(k2) + "," + std::to_string(k3) + ")");
  }
  return {k1, k2, k3};
}

long GodinhoStats::total() const { return std::accumulate(counts.begin(), counts.end(), 0L); }

GodinhoStats godinho_stats(const FixedPointDatum& d, const WeightTriple& k) {
  require_three(d);
  const auto patterns = sorted_patterns(k);
  GodinhoStats stats{k, {}};
  for (std::size_t i = 0; i < d.m(); ++i) {
    auto w = d.points()[i].weights;
    std::sort(w.begin(), w.end());
    const auto matches = matching_patterns(w, patterns);
    if (matches.empty()) {
      throw PatternError(i, "weights not of the prescribed form: point " + std::to_string(i) + " " +
                                render_weights(d.points()[i].weights) + " fits no sign pattern of (" +
                                std::to_string(k.k1) + "," + std::to_string(k.k2) + "," +
                                std::to_string(k.k3) + ")");
    }
    ++stats.counts[matches.front()];
  }
  return stats;
}

std::vector<GodinhoStats> godinho_all_tallies(const FixedPointDatum& d, const WeightTriple& k) {
  require_three(d);
  (void)godinho_stats(d, k);  // surfaces PatternError
  const auto patterns = sorted_patterns(k);

  // Identical weight multisets match identical pattern sets.
  std::map<std::vector<Weight>, long> groups;
  for (const auto& p : d.points()) {
    auto w = p.weights;
    std::sort(w.begin(), w.end());
    ++groups[w];
  }

  std::set<GodinhoStats> tallies{GodinhoStats{k, {}}};
  for (const auto& [weights, count] : groups) {
    const auto matches = matching_patterns(weights, patterns);
    std::set<GodinhoStats> next;
    std::vector<long> parts(matches.size());
    for (const auto& base : tallies) {
      for_each_composition(count, parts, 0, [&](const std::vector<long>& split) {
        GodinhoStats s = base;
        for (std::size_t i = 0; i < matches.size(); ++i) s.counts[matches[i]] += split[i];
        next.insert(s);
      });
    }
    tallies = std::move(next);
  }
  return {tallies.begin(), tallies.end()};
}

std::string godinho_verdict_name(const GodinhoVerdict& v) {
  switch (v.index()) {
    case 0: return "Case1";
    case 1: return "Case2";
    default: return "Neither";
  }
}

GodinhoVerdict godinho_verdict(const GodinhoStats& stats) {
  const auto c1 = case1_failure(stats);
  if (!c1) return GodinhoCase1{};
  const auto c2 = case2_failure(stats);
  if (!c2) return GodinhoCase2{};
  return GodinhoNeither{*c1 + "; " + *c2};
}

GodinhoVerdict godinho_classify(const GodinhoStats& stats, const FixedPointDatum& d) {
  GodinhoVerdict verdict = godinho_verdict(stats);
  for (const auto& alt : godinho_all_tallies(d, stats.k)) {
    const GodinhoVerdict other = godinho_verdict(alt);
    if (other.index() != verdict.index()) {
      return GodinhoNeither{"ambiguous tally: [" + render_stats(stats) + "] gives " +
                            godinho_verdict_name(verdict) + " but [" + render_stats(alt) + "] gives " +
                            godinho_verdict_name(other)};
    }
  }
  return verdict;
}

LaurentPolynomial godinho_todd_numerator(const GodinhoStats& s) {
  const auto& k = s.k;
  LaurentPolynomial p(s.N0());
  p -= LaurentPolynomial::monomial(s.s1(), k.k1) + LaurentPolynomial::monomial(s.s2(), k.k2) +
       LaurentPolynomial::monomial(s.s3(), k.k3);
  p += LaurentPolynomial::monomial(s.t1(), k.k2 + k.k3) + LaurentPolynomial::monomial(s.t2(), k.k1 + k.k3) +
       LaurentPolynomial::monomial(s.t3(), k.k1 + k.k2);
  p -= LaurentPolynomial::monomial(s.N3(), k.k1 + k.k2 + k.k3);
  return p;
}

LaurentPolynomial godinho_todd_denominator(const WeightTriple& k) {
  return (LaurentPolynomial(1) - g_pow(k.k1)) * (LaurentPolynomial(1) - g_pow(k.k2)) *
         (LaurentPolynomial(1) - g_pow(k.k3));
}

}  // namespace rigidity

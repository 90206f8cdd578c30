#include "rigidity/report.hpp"

#include <sstream>

#include "rigidity/genus.hpp"
#include "rigidity/json_util.hpp"

namespace rigidity {

namespace {

nlohmann::json classification_json(const Classification& c) {
  nlohmann::json out{{"status", classification_name(c)}, {"failure", nullptr}, {"detail", nullptr}};
  if (const auto* nr = std::get_if<NotRealizable>(&c)) {
    out["failure"] = failure_name(nr->failure);
    out["p"] = nr->p;
    out["detail"] = nr->detail;
  }
  return out;
}

nlohmann::json verdict_json(long p, const SumVerdict& v) {
  nlohmann::json out{{"p", p}, {"verdict", verdict_name(v)}};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ConstantInteger>) {
          out["value"] = to_string(x.value);
        } else if constexpr (std::is_same_v<T, ConstantNonInteger>) {
          out["value"] = to_string(x.value);
        } else {
          out["value"] = to_string(x.reduced);
        }
      },
      v);
  return out;
}

std::string render_list(const nlohmann::json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ", ";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + ")";
}

std::string chi_y_text(const nlohmann::json& coeffs) {
  std::string s;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (p) s += " + ";
    s += "[" + coeffs[p].get<std::string>() + "]*y^" + std::to_string(p);
  }
  return s;
}

}  // namespace

nlohmann::json analyze_report(const FixedPointDatum& d, const std::vector<Rational>& y_samples) {
  const ChiProfile profile = chi_profile(d);
  const int n = d.n();
  nlohmann::json report;
  report["datum"] = to_json(d);
  report["n"] = n;
  report["m"] = d.m();

  nlohmann::json constancy = nlohmann::json::array();
  for (std::size_t p = 0; p < profile.verdicts.size(); ++p) {
    constancy.push_back(verdict_json(static_cast<long>(p), profile.verdicts[p]));
  }
  report["constancy"] = std::move(constancy);

  nlohmann::json chi_y = nlohmann::json::array();
  for (const auto& c : chi_y_localization(d)) chi_y.push_back(to_string(c));
  report["chi_y"] = std::move(chi_y);

  if (profile.chi) {
    nlohmann::json chi = nlohmann::json::array();
    for (const auto& c : *profile.chi) chi.push_back(integer_json(c));
    report["chi"] = std::move(chi);
  } else {
    report["chi"] = nullptr;
  }
  report["np"] = profile.np;

  if (profile.chi) {
    const auto rel = check_relations(n, *profile.chi, profile.np);
    report["relations"] = {{"checked", true}, {"holds", rel.holds}, {"violations", rel.violations}};
  } else {
    report["relations"] = {{"checked", false},
                           {"holds", nullptr},
                           {"violations", {"relations undefined for non-constant data"}}};
  }

  const auto balance = balance_check(d);
  report["balance"] = {{"holds", balance.balanced},
                       {"witness", balance.witness ? nlohmann::json(*balance.witness) : nlohmann::json(nullptr)}};
  report["weight_sum"] = integer_json(weight_sum(d));

  const RationalFunction recip = reciprocal_sum(d);
  const Rational expected = make_rational(static_cast<long>(d.m()) * n, 2);
  const auto recip_value = recip.constant_value();
  report["reciprocal_sum"] = {{"value", to_string(recip)},
                              {"expected", to_string(expected)},
                              {"holds", recip_value && *recip_value == expected}};

  nlohmann::json limits = nlohmann::json::array();
  for (const auto& y : y_samples) {
    const auto [at_zero, at_infinity] = limit_profile(d, y);
    const auto [sym_zero, sym_infinity] = symbolic_limit_profile(d, y);
    nlohmann::json entry{{"y", to_string(y)},
                         {"at_zero", to_string(at_zero)},
                         {"at_infinity", to_string(at_infinity)},
                         {"symbolic_at_zero", to_string(sym_zero)},
                         {"symbolic_at_infinity", to_string(sym_infinity)}};
    if (profile.chi) {
      Rational value = 0;
      for (std::size_t p = 0; p < profile.chi->size(); ++p) {
        value += Rational((*profile.chi)[p]) * pow(y, static_cast<Exponent>(p));
      }
      entry["chi_y"] = to_string(value);
    } else {
      entry["chi_y"] = nullptr;
    }
    limits.push_back(std::move(entry));
  }
  report["limits"] = std::move(limits);

  const bool consistent = index_consistent(profile, n);
  const Classification cls = classify_profile(profile, n);
  report["index_consistent"] = consistent;
  report["classification"] = classification_json(cls);

  if (is_semifree(d)) {
    const auto sf = semifree_check(d);
    report["semifree"] = {{"holds", sf.holds}, {"violations", sf.violations}};
  } else {
    report["semifree"] = nullptr;
  }

  report["conclusion"] = consistent ? "passes all necessary conditions checked"
                                    : "fails a necessary condition; cannot come from a manifold";
  return report;
}

int analyze_exit_code(const nlohmann::json& report) {
  const bool ok = report.at("index_consistent").get<bool>() &&
                  report.at("classification").at("status") != "NotRealizable";
  return ok ? kExitConsistent : kExitNotRealizable;
}

nlohmann::json classify6_report(const FixedPointDatum& d, const WeightTriple& k) {
  const GodinhoStats stats = godinho_stats(d, k);
  const GodinhoVerdict verdict = godinho_classify(stats, d);
  const Classification status = hamiltonian_status(d);

  nlohmann::json report;
  report["datum"] = to_json(d);
  report["k"] = {k.k1, k.k2, k.k3};
  report["stats"] = {{"N0", stats.N0()}, {"s1", stats.s1()}, {"s2", stats.s2()}, {"s3", stats.s3()},
                     {"t1", stats.t1()}, {"t2", stats.t2()}, {"t3", stats.t3()}, {"N3", stats.N3()}};
  report["verdict"] = godinho_verdict_name(verdict);
  if (const auto* neither = std::get_if<GodinhoNeither>(&verdict)) {
    report["witness"] = neither->witness;
  } else {
    report["witness"] = nullptr;
  }

  const LaurentPolynomial numerator = godinho_todd_numerator(stats);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : numerator.terms()) {
    terms.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
  }
  report["todd_numerator"] = to_string(numerator);
  report["todd_numerator_terms"] = std::move(terms);
  report["todd_denominator"] = to_string(godinho_todd_denominator(k));
  report["todd_formula_matches"] =
      RationalFunction(numerator, godinho_todd_denominator(k)) == chi_p_sum(d, 0);

  report["hamiltonian_status"] = classification_json(status);
  report["agrees_with_todd_criterion"] =
      (std::holds_alternative<GodinhoCase1>(verdict) && std::holds_alternative<NonHamiltonian>(status)) ||
      (std::holds_alternative<GodinhoCase2>(verdict) && std::holds_alternative<Hamiltonian>(status)) ||
      (std::holds_alternative<GodinhoNeither>(verdict) && std::holds_alternative<NotRealizable>(status));
  return report;
}

int classify6_exit_code(const nlohmann::json& report) {
  return report.at("verdict") == "Neither" ? kExitNotRealizable : kExitConsistent;
}

std::string render_analyze(const nlohmann::json& r) {
  std::ostringstream out;
  out << "datum: " << r["datum"].dump() << "\n";
  out << "n = " << r["n"] << ", m = " << r["m"] << "\n";
  out << "constancy:\n";
  for (const auto& v : r["constancy"]) {
    out << "  p=" << v["p"] << "  " << v["verdict"].get<std::string>() << "  " << v["value"].get<std::string>()
        << "\n";
  }
  out << "chi_y = " << chi_y_text(r["chi_y"]) << "\n";
  out << "chi = " << (r["chi"].is_null() ? std::string("undefined") : render_list(r["chi"])) << "\n";
  out << "np = " << render_list(r["np"]) << "\n";
  const auto& rel = r["relations"];
  out << "relations: checked=" << rel["checked"] << " holds=" << rel["holds"] << "\n";
  for (const auto& v : rel["violations"]) out << "  " << v.get<std::string>() << "\n";
  out << "balance: holds=" << r["balance"]["holds"] << " witness=" << r["balance"]["witness"] << "\n";
  out << "weight_sum = " << r["weight_sum"] << "\n";
  const auto& rs = r["reciprocal_sum"];
  out << "reciprocal_sum = " << rs["value"].get<std::string>() << " (expected " << rs["expected"].get<std::string>()
      << ", holds=" << rs["holds"] << ")\n";
  out << "limits:\n";
  for (const auto& l : r["limits"]) {
    out << "  y=" << l["y"].get<std::string>() << "  at_zero=" << l["at_zero"].get<std::string>()
        << "  at_infinity=" << l["at_infinity"].get<std::string>()
        << "  symbolic_at_zero=" << l["symbolic_at_zero"].get<std::string>()
        << "  symbolic_at_infinity=" << l["symbolic_at_infinity"].get<std::string>()
        << "  chi_y=" << (l["chi_y"].is_null() ? std::string("undefined") : l["chi_y"].get<std::string>()) << "\n";
  }
  out << "index_consistent: " << r["index_consistent"] << "\n";
  const auto& c = r["classification"];
  out << "classification: " << c["status"].get<std::string>();
  if (!c["failure"].is_null()) {
    out << " (failure=" << c["failure"].get<std::string>() << ", p=" << c["p"]
        << ", detail=" << c["detail"].get<std::string>() << ")";
  }
  out << "\n";
  if (!r["semifree"].is_null()) {
    out << "semifree: holds=" << r["semifree"]["holds"] << "\n";
    for (const auto& v : r["semifree"]["violations"]) out << "  " << v.get<std::string>() << "\n";
  } else {
    out << "semifree: not applicable\n";
  }
  out << "conclusion: " << r["conclusion"].get<std::string>() << "\n";
  return out.str();
}

std::string render_classify6(const nlohmann::json& r) {
  std::ostringstream out;
  out << "datum: " << r["datum"].dump() << "\n";
  out << "k = " << render_list(r["k"]) << "\n";
  out << "stats:";
  for (const char* key : {"N0", "s1", "s2", "s3", "t1", "t2", "t3", "N3"}) out << " " << key << "=" << r["stats"][key];
  out << "\n";
  out << "verdict: " << r["verdict"].get<std::string>() << "\n";
  out << "witness: " << (r["witness"].is_null() ? std::string("none") : r["witness"].get<std::string>()) << "\n";
  out << "todd_numerator_terms:" << (r["todd_numerator_terms"].empty() ? " none" : "") << "\n";
  for (const auto& t : r["todd_numerator_terms"]) {
    out << "  " << t["coefficient"].get<std::string>() << "*g^" << t["exponent"] << "\n";
  }
  out << "todd_numerator = " << r["todd_numerator"].get<std::string>() << "\n";
  out << "todd_denominator = " << r["todd_denominator"].get<std::string>() << "\n";
  out << "todd_formula_matches: " << r["todd_formula_matches"] << "\n";
  const auto& c = r["hamiltonian_status"];
  out << "hamiltonian_status: " << c["status"].get<std::string>();
  if (!c["failure"].is_null()) out << " (" << c["detail"].get<std::string>() << ")";
  out << "\n";
  out << "agrees_with_todd_criterion: " << r["agrees_with_todd_criterion"] << "\n";
  return out.str();
}

}  // namespace rigidity

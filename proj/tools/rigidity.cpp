// Command-line front end: analyze, classify6, enumerate, selfcheck.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidity/classify.hpp"
#include "rigidity/datum.hpp"
#include "rigidity/enumerate.hpp"
#include "rigidity/report.hpp"
#include "rigidity/selfcheck.hpp"

namespace {

using namespace rigidity;

rigidity::FixedPointDatum load(const std::string& path) {
  std::vector<std::string> unknown;
  FixedPointDatum d = parse_datum_file(path, &unknown);
  if (!unknown.empty()) {
    std::cerr << "warning: ignoring unknown fields:";
    for (const auto& f : unknown) std::cerr << " " << f;
    std::cerr << "\n";
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact localization checks for circle actions with isolated fixed points"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 42;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_option("--jobs", jobs, "Worker threads for enumerate")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for selfcheck");

  std::string path;
  std::vector<std::string> y_text{"-1", "0", "1", "2"};
  auto* analyze = app.add_subcommand("analyze", "Analyze a fixed-point datum file");
  analyze->add_option("path", path, "Datum file")->required();
  analyze->add_option("--y", y_text, "Values of y for the limit profile (p or p/q)")->delimiter(',');

  Weight k1 = 0, k2 = 0, k3 = 0;
  auto* classify6 = app.add_subcommand("classify6", "Two-case classification for n = 3 and weights (+-k1,+-k2,+-k3)");
  classify6->add_option("path", path, "Datum file")->required();
  classify6->add_option("k1", k1)->required();
  classify6->add_option("k2", k2)->required();
  classify6->add_option("k3", k3)->required();

  SearchBounds bounds;
  double ceiling = kDefaultCostCeiling;
  bool no_ceiling = false;
  auto* enumerate = app.add_subcommand("enumerate", "Census of index-consistent data within bounds");
  enumerate->add_option("n", bounds.n)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("max_points", bounds.max_points)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("max_weight", bounds.max_weight)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--ceiling", ceiling, "Cost ceiling in raw shapes");
  enumerate->add_flag("--no-ceiling", no_ceiling, "Disable the cost ceiling");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the seeded property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*analyze) {
      std::vector<Rational> ys;
      for (const auto& t : y_text) ys.push_back(parse_rational(t));
      const FixedPointDatum d = load(path);
      const auto report = analyze_report(d, ys);
      std::cout << (json ? report.dump() + "\n" : render_analyze(report));
      return analyze_exit_code(report);
    }
    if (*classify6) {
      WeightTriple k;
      try {
        k = make_weight_triple(k1, k2, k3);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitInputError;
      }
      const FixedPointDatum d = load(path);
      if (d.n() != 3) {
        std::cerr << "error: classify6 needs a datum with n = 3, got n = " << d.n() << "\n";
        return kExitInputError;
      }
      try {
        const auto report = classify6_report(d, k);
        std::cout << (json ? report.dump() + "\n" : render_classify6(report));
        return classify6_exit_code(report);
      } catch (const PatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotRealizable;
      }
    }
    if (*enumerate) {
      EnumerateOptions options;
      options.jobs = jobs;
      options.cost_ceiling = no_ceiling ? 0 : ceiling;
      try {
        const auto entries = enumerate_consistent(bounds, options);
        std::cout << census_text(entries);
        std::cerr << "entries: " << entries.size();
        for (const auto& [name, count] : census_summary(entries)) std::cerr << ", " << name << ": " << count;
        std::cerr << "\n";
        return kExitConsistent;
      } catch (const CostCeilingExceeded& e) {
        std::cerr << "refused: " << e.what() << " (use --ceiling or --no-ceiling)\n";
        return kExitResourceRefusal;
      }
    }
    if (*selfcheck) {
      const auto result = run_selfcheck(seed);
      std::cout << "seed " << seed << "\n" << result.summary();
      return result.passed() ? kExitConsistent : kExitNotRealizable;
    }
  } catch (const DatumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

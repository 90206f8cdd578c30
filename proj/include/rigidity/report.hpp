#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rigidity/classify.hpp"
#include "rigidity/datum.hpp"

namespace rigidity {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitConsistent = 0,
  kExitInputError = 1,
  kExitNotRealizable = 2,
  kExitResourceRefusal = 3,
};

/// Machine-readable analysis of a datum: constancy verdicts, chi_y
/// coefficients, chi and N tables, relations, balance, weight sum,
/// reciprocal sum, limits at the requested y values and the classification.
nlohmann::json analyze_report(const FixedPointDatum& d, const std::vector<Rational>& y_samples);

/// kExitConsistent when the datum passes every necessary condition and the
/// classification is Hamiltonian or NonHamiltonian, else kExitNotRealizable.
int analyze_exit_code(const nlohmann::json& report);

/// Six-dimensional two-case report for the weight triple k. Throws
/// PatternError when some point does not fit (+-k1, +-k2, +-k3).
nlohmann::json classify6_report(const FixedPointDatum& d, const WeightTriple& k);

/// kExitConsistent for Case1/Case2, kExitNotRealizable for Neither.
int classify6_exit_code(const nlohmann::json& report);

/// Plain-text rendering; every field of the JSON report appears.
std::string render_analyze(const nlohmann::json& report);
std::string render_classify6(const nlohmann::json& report);

}  // namespace rigidity

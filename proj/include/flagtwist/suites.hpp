#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagtwist/local_models.hpp"
#include "flagtwist/reduced3.hpp"
#include "flagtwist/springer.hpp"
#include "flagtwist/twist.hpp"

namespace flagtwist {

std::string version_string();

struct RunConfig {
  int n = 3;
  std::uint64_t seed = 1;
  int samples = 200;
  double profile_cutoff = 1.0;
  double figure_scale = 4.0;  // N used by the reduced-chart suites
  std::map<std::string, double> tolerances;
  std::string output;  // report path; empty = stdout only

  double tol(const std::string& name, double fallback) const;
  nlohmann::json to_json() const;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool all_pass() const;
};

const std::vector<std::string>& suite_names();
// suite -> one-line description of the invariant it checks
std::vector<std::pair<std::string, std::string>> suite_descriptions();

SuiteReport run_suite(const std::string& suite, const RunConfig& config);
// suite == "all" concatenates every suite with prefixed case names
SuiteReport run_verify(const std::string& suite, const RunConfig& config);

nlohmann::json report_to_json(const SuiteReport& report, const RunConfig& config);

// The acceptance gate: every criterion at its pinned tolerance.
std::vector<CaseResult> acceptance_criteria(std::uint64_t seed);

// Machine-readable outputs behind the CLI subcommands.
nlohmann::json figure1_report(int alpha, double N, int samples,
                              const TwistProfile& profile);
std::string twist_trajectory_csv(const CotangentPoint& p, int alpha,
                                 const TwistProfile& profile, int steps);
std::string edge_trajectory_csv(int alpha, int edge, int samples, double N,
                                const TwistProfile& profile);
std::string springer_csv(const RVec& p, int samples, std::uint64_t seed);
nlohmann::json sample_fiber_json(const RVec& p, int count, std::uint64_t seed);

}  // namespace flagtwist

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "flagtwist/suites.hpp"

using namespace flagtwist;

TEST_CASE("suite reports are deterministic per seed") {
  RunConfig cfg;
  cfg.seed = 42;
  cfg.samples = 24;
  const std::string a = report_to_json(run_verify("twist", cfg), cfg).dump();
  const std::string b = report_to_json(run_verify("twist", cfg), cfg).dump();
  CHECK(a == b);
  RunConfig other = cfg;
  other.seed = 43;
  const std::string c = report_to_json(run_verify("twist", other), other).dump();
  CHECK(a != c);
}

TEST_CASE("every named suite runs green at default tolerances") {
  RunConfig cfg;
  cfg.seed = 7;
  cfg.samples = 24;
  for (const auto& name : suite_names()) {
    const SuiteReport report = run_suite(name, cfg);
    CHECK(report.cases.size() >= 3);
    for (const auto& c : report.cases) {
      INFO(name << " / " << c.name << " max_error=" << c.max_error);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS(run_suite("nope", cfg));
}

TEST_CASE("report json carries the schema fields") {
  RunConfig cfg;
  cfg.samples = 16;
  const SuiteReport report = run_suite("localmodels", cfg);
  const nlohmann::json j = report_to_json(report, cfg);
  CHECK(j.contains("version"));
  CHECK(j.at("suite") == "localmodels");
  CHECK(j.at("config").contains("seed"));
  for (const auto& c : j.at("cases")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("max_error"));
    const bool pass = c.at("status") == "pass";
    const bool within = c.at("max_error").get<double>() <= c.at("tolerance").get<double>();
    CHECK(pass == within);
  }
  // cases sorted by name
  std::string prev;
  for (const auto& c : j.at("cases")) {
    const std::string name = c.at("name");
    CHECK(prev <= name);
    prev = name;
  }
}

TEST_CASE("figure1 report payload") {
  const TwistProfile profile(1.0);
  const nlohmann::json rep = figure1_report(1, 4.0, 64, profile);
  CHECK(rep.at("reversed_23") == true);
  CHECK(rep.at("interior_hits_23") == 0);
  CHECK(rep.at("interior_hits_31") == 0);
  CHECK(rep.at("vertex_permutation") == nlohmann::json::array({1, 3, 2}));
  CHECK(rep.at("on_edge_12_interval").size() == 1);
}

TEST_CASE("trajectory payloads") {
  const TwistProfile profile(1.0);
  Rng rng(1);
  const CotangentPoint p = random_point(3, rng);
  const std::string twist_csv = twist_trajectory_csv(p, 1, profile, 8);
  CHECK(twist_csv.rfind("t,xi_00_re", 0) == 0);
  CHECK(std::count(twist_csv.begin(), twist_csv.end(), '\n') == 9);
  // header-only file for zero steps
  const std::string empty_csv = twist_trajectory_csv(p, 1, profile, 0);
  CHECK(std::count(empty_csv.begin(), empty_csv.end(), '\n') == 1);

  const std::string edge_csv = edge_trajectory_csv(1, 12, 32, 4.0, profile);
  CHECK(edge_csv.rfind("t,m12,m13,m23,nu", 0) == 0);
  // m12 stays constant along the trace of edge 12 under the first generator
  std::istringstream lines(edge_csv);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double t = std::stod(line.substr(0, c1));
    const double m12 = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    CHECK(std::abs(m12 - 16.0 * t * t) <= 1e-8);
  }

  const std::string census = springer_csv(RVec{{1.0, -1.0, 0.0}}, 8, 3);
  CHECK(census.rfind("sample_id,partition,epsilon,m12,m13,m23", 0) == 0);
  CHECK(std::count(census.begin(), census.end(), '\n') == 9);

  const nlohmann::json fibers = sample_fiber_json(RVec{{1.0, 0.0, -1.0}}, 3, 9);
  CHECK(fibers.size() == 3);
  CotangentPoint decoded;
  from_json(fibers[0], decoded);
  CHECK(decoded.dim() == 3);
  CHECK_NOTHROW(decoded.validate(1e-8));
}

TEST_CASE("suite descriptions cover every suite") {
  const auto desc = suite_descriptions();
  CHECK(desc.size() == suite_names().size());
}

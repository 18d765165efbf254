#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "flagtwist/suites.hpp"

namespace {

using namespace flagtwist;

RVec parse_values(const std::vector<double>& raw, int n) {
  if (raw.empty()) {
    RVec p = RVec::Zero(n);
    p(0) = 1.0;
    p(n - 1) = -1.0;
    return p;
  }
  RVec p(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) p(static_cast<int>(k)) = raw[k];
  return p;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << body;
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& raw) {
  std::map<std::string, double> tols;
  for (const auto& entry : raw) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--tol expects name=value, got: " + entry);
    const double value = std::stod(entry.substr(eq + 1));
    if (!(value > 0.0))
      throw CLI::ValidationError("--tol values must be positive: " + entry);
    tols[entry.substr(0, eq)] = value;
  }
  return tols;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification kit for moment maps, fiberwise Dehn twists "
               "and reduced-space braid generators on T*(SU(n)/T)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", version_string());

  int n = 3;
  std::uint64_t seed = 1;
  int samples = 200;
  double cutoff = 1.0;
  double scale_N = 4.0;
  std::vector<std::string> tol_args;
  std::string json_path;
  std::string csv_path;
  app.add_option("--n", n, "matrix size")->check(CLI::Range(2, 8));
  app.add_option("--seed", seed, "root seed");
  app.add_option("--samples", samples, "sample count")->check(CLI::PositiveNumber);
  app.add_option("--profile-cutoff", cutoff, "twist profile cutoff t0")
      ->check(CLI::PositiveNumber);
  app.add_option("--N", scale_N, "chart scale (multiple of the cutoff)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", tol_args, "tolerance override name=value");
  app.add_option("--json", json_path, "write JSON output to this path");
  app.add_option("--csv", csv_path, "write CSV output to this path");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  bool list_suites = false;
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_flag("--list", list_suites, "list suites and their invariants");

  auto* sample = app.add_subcommand("sample", "sample moment fibers as JSON");
  std::vector<double> p_values;
  sample->add_option("--p", p_values, "diagonal moment value (comma list)")
      ->delimiter(',');

  auto* twist_cmd = app.add_subcommand("twist", "apply or trace a fiberwise twist");
  int alpha = 1;
  std::string point_path;
  bool random_pt = false;
  bool trajectory = false;
  twist_cmd->add_option("--alpha", alpha, "simple root index (1-based)");
  twist_cmd->add_option("--point", point_path, "JSON file with a point record");
  twist_cmd->add_flag("--random", random_pt, "use a random point");
  twist_cmd->add_flag("--trajectory", trajectory, "emit the t in [0,1] family as CSV");

  auto* figure1 = app.add_subcommand("figure1", "edge traces and vertex permutations "
                                                "of the SU(3) reduced chart");
  int fig_alpha = 1;
  int fig_edge = 12;
  bool fig_traj = false;
  figure1->add_option("--alpha", fig_alpha, "simple root index (1 or 2)");
  figure1->add_option("--edge", fig_edge, "edge to trace (12, 23 or 31)");
  figure1->add_flag("--trajectory", fig_traj, "emit the edge trace as CSV");

  auto* springer = app.add_subcommand("springer", "Jordan-type census over a fiber");
  std::vector<double> sp_values;
  springer->add_option("--p", sp_values, "diagonal moment value (comma list)")
      ->delimiter(',');

  auto* localmodels = app.add_subcommand("localmodels", "circle-equivariant local models");
  std::string lm_suite = "sp4";
  localmodels->add_option("--suite", lm_suite, "sp4, rays or blowup");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.profile_cutoff = cutoff;
    cfg.figure_scale = scale_N / cutoff;
    cfg.tolerances = parse_tols(tol_args);
    cfg.output = json_path;
    const TwistProfile profile(cutoff);

    if (verify->parsed()) {
      if (list_suites) {
        for (const auto& [name, what] : suite_descriptions())
          std::cout << name << ": " << what << "\n";
        return 0;
      }
      const SuiteReport report = run_verify(suite, cfg);
      const std::string body = report_to_json(report, cfg).dump(2) + "\n";
      write_text(json_path, body);
      if (!json_path.empty()) {
        for (const auto& c : report.cases)
          std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name
                    << "  max_error=" << c.max_error << "\n";
      }
      return report.all_pass() ? 0 : 1;
    }

    if (sample->parsed()) {
      const RVec p = parse_values(p_values, n);
      write_text(json_path, sample_fiber_json(p, samples, seed).dump(2) + "\n");
      return 0;
    }

    if (twist_cmd->parsed()) {
      CotangentPoint pt;
      if (!point_path.empty()) {
        std::ifstream in(point_path);
        if (!in) throw std::runtime_error("cannot read point file: " + point_path);
        nlohmann::json j;
        in >> j;
        from_json(j, pt);
        pt.validate();
      } else if (random_pt) {
        Rng rng = Rng::derive(seed, "cli-twist");
        pt = random_point(n, rng);
      } else {
        throw std::runtime_error("twist: provide --point file.json or --random");
      }
      if (trajectory) {
        write_text(csv_path, twist_trajectory_csv(pt, alpha, profile, samples));
      } else {
        nlohmann::json j;
        to_json(j, tau(pt, alpha, profile));
        write_text(json_path, j.dump(2) + "\n");
      }
      return 0;
    }

    if (figure1->parsed()) {
      const double N = scale_N;
      if (fig_traj) {
        write_text(csv_path, edge_trajectory_csv(fig_alpha, fig_edge, samples, N, profile));
      } else {
        write_text(json_path,
                   figure1_report(fig_alpha, N, samples, profile).dump(2) + "\n");
      }
      return 0;
    }

    if (springer->parsed()) {
      const RVec p = parse_values(sp_values, n);
      write_text(csv_path, springer_csv(p, samples, seed));
      return 0;
    }

    if (localmodels->parsed()) {
      nlohmann::json out;
      if (lm_suite == "sp4" || lm_suite == "rays") {
        Rng rng = Rng::derive(seed, "cli-localmodels");
        double round_trip = 0.0;
        double rays_gap = 0.0;
        for (int k = 0; k < samples; ++k) {
          const Sp4Equivariant e = random_sp4(rng);
          double res = 0.0;
          const auto back = sp4_membership(sp4_matrix(e), 1e-8, &res);
          round_trip = std::max(round_trip, res);
          if (back)
            round_trip = std::max(round_trip, (sp4_matrix(*back) - sp4_matrix(e)).norm());
          const auto closed = induced_rays(e);
          const auto numeric = induced_rays_numeric(e);
          rays_gap = std::max({rays_gap, std::abs(closed.first - numeric.first),
                               std::abs(closed.second - numeric.second)});
        }
        out = {{"suite", lm_suite},
               {"samples", samples},
               {"round_trip", round_trip},
               {"rays_transport", rays_gap}};
      } else if (lm_suite == "blowup") {
        Rng rng = Rng::derive(seed, "cli-blowup");
        const BlowupReport r = blowup_checks(0.5, 0.25, 2, samples, rng);
        out = {{"suite", "blowup"},
               {"transition_symplectic", r.transition_symplectic},
               {"moment_agreement", r.moment_agreement},
               {"min_gradient", r.min_gradient},
               {"weights", {r.weight0, r.weight1}}};
      } else {
        throw std::runtime_error("localmodels: unknown suite " + lm_suite);
      }
      write_text(json_path, out.dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}

#include "flagtwist/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace flagtwist {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const Complex kI(0.0, 1.0);

CaseResult make_case(std::string name, double max_error, double tolerance,
                     nlohmann::json details = nlohmann::json::object()) {
  CaseResult c;
  c.name = std::move(name);
  c.max_error = max_error;
  c.tolerance = tolerance;
  c.pass = max_error <= tolerance;
  c.details = std::move(details);
  return c;
}

CaseResult make_flag_case(std::string name, bool pass,
                          nlohmann::json details = nlohmann::json::object()) {
  CaseResult c;
  c.name = std::move(name);
  c.pass = pass;
  c.max_error = pass ? 0.0 : 1.0;
  c.tolerance = 0.5;
  c.details = std::move(details);
  return c;
}

// Fold an auxiliary boolean condition into the case while keeping the
// contract status == (max_error <= tolerance).
void enforce(CaseResult& c, bool ok) {
  if (!ok) {
    c.pass = false;
    c.max_error = std::max(c.max_error, 2.0 * c.tolerance + 1.0);
  }
}

// Random point with the root-plane modulus kept out of the branch guard band.
CotangentPoint random_point_guarded(int n, int i, Rng& rng, double guard,
                                    double xi_scale = 1.0) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    CotangentPoint p = random_point(n, rng, xi_scale);
    if (root_component(p.xi, i).modulus >= guard) return p;
  }
  throw std::runtime_error("random_point_guarded: guard band never left");
}

RVec random_chamber(int n, Rng& rng, bool singular) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    RVec p(n);
    double sum = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      p(k) = rng.uniform(-1.0, 1.0);
      sum += p(k);
    }
    p(n - 1) = -sum;
    if (singular) {
      // recenter a random proper subset to sum exactly zero
      const int size = 1 + static_cast<int>(rng.uniform() * (n - 1));
      std::vector<int> order(n);
      for (int k = 0; k < n; ++k) order[k] = k;
      for (int k = n - 1; k > 0; --k)
        std::swap(order[k], order[static_cast<int>(rng.uniform() * (k + 1))]);
      double subset_sum = 0.0;
      for (int k = 0; k < size; ++k) subset_sum += p(order[k]);
      for (int k = 0; k < size; ++k) p(order[k]) -= subset_sum / size;
      for (int k = size; k < n; ++k) p(order[k]) += subset_sum / (n - size);
    }
    std::sort(p.data(), p.data() + n, std::greater<double>());
    bool strict = true;
    for (int k = 0; k + 1 < n; ++k)
      if (!(p(k) > p(k + 1) + 1e-3)) strict = false;
    if (!strict) continue;
    const bool has_zero_subset = zero_subset_sum(p, 1e-9).found;
    if (singular && !has_zero_subset) continue;
    if (!singular) {
      // demand a safety margin away from every subset-sum zero
      double min_sum = 1e300;
      const unsigned total = 1u << n;
      for (unsigned mask = 1; mask + 1 < total; ++mask) {
        double s = 0.0;
        for (int k = 0; k < n; ++k)
          if (mask & (1u << k)) s += p(k);
        min_sum = std::min(min_sum, std::abs(s));
      }
      if (min_sum < 0.05) continue;
    }
    return p;
  }
  throw std::runtime_error("random_chamber: rejection sampling failed");
}

RVec pivot_value(int n) {  // diag(1, -1, 0, ..., 0)
  RVec p = RVec::Zero(n);
  p(0) = 1.0;
  p(1) = -1.0;
  return p;
}

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

// ---------------------------------------------------------------------------
// suite: symplectic (chart form and pullback machinery)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_symplectic(const RunConfig& cfg) {
  std::vector<CaseResult> cases;
  const int n = cfg.n;
  const int pts = std::max(8, cfg.samples / 4);

  {
    Rng rng = Rng::derive(cfg.seed, "symplectic/antisymmetry");
    double worst = 0.0;
    double worst_ratio = 1.0;
    const auto basis = tangent_basis(n);
    for (int k = 0; k < pts; ++k) {
      CotangentPoint p = random_point(n, rng);
      TangentVector v = basis[static_cast<std::size_t>(rng.uniform() * basis.size())];
      worst = std::max(worst, std::abs(symplectic_form(p, v, v)));
      RMat gram(basis.size(), basis.size());
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
          gram(a, b) = symplectic_form(p, basis[a], basis[b]);
      worst = std::max(worst, (gram + gram.transpose()).norm());
      Eigen::JacobiSVD<RMat> svd(gram);
      const auto& sv = svd.singularValues();
      worst_ratio = std::min(worst_ratio, sv(sv.size() - 1) / sv(0));
    }
    auto c = make_case("symplectic/antisymmetric", worst,
                       cfg.tol("antisymmetry", 1e-10));
    c.details["min_singular_ratio"] = worst_ratio;
    enforce(c, worst_ratio > 1e-8);
    cases.push_back(c);
  }
  {
    Rng rng = Rng::derive(cfg.seed, "symplectic/representative");
    double worst = 0.0;
    const auto basis = tangent_basis(n);
    for (int k = 0; k < pts; ++k) {
      CotangentPoint p = random_point(n, rng);
      CMat t = CMat::Identity(n, n);
      double sum = 0.0;
      for (int j = 0; j + 1 < n; ++j) {
        const double th = rng.angle();
        t(j, j) = std::exp(kI * th);
        sum += th;
      }
      t(n - 1, n - 1) = std::exp(-kI * sum);
      CotangentPoint q{p.x * t, t.adjoint() * p.xi * t};
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
          const double before = symplectic_form(p, basis[a], basis[b]);
          const double after = symplectic_form(q, transport_torus(basis[a], t),
                                               transport_torus(basis[b], t));
          worst = std::max(worst, std::abs(after - before));
        }
    }
    cases.push_back(make_case("symplectic/representative-invariance", worst,
                              cfg.tol("representative", 1e-10)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "symplectic/left-action");
    double worst = 0.0;
    for (int k = 0; k < std::max(4, pts / 4); ++k) {
      CotangentPoint p = random_point(n, rng);
      const CMat g = random_su(n, rng);
      auto map = [&](const CotangentPoint& q) {
        return CotangentPoint{g * q.x, q.xi};
      };
      worst = std::max(worst, pullback_error(map, p, 1e-5));
    }
    cases.push_back(
        make_case("symplectic/left-action-pullback", worst, cfg.tol("left_action", 1e-6)));
  }
  {
    // scaling the covector is not symplectic; the probe must see it
    Rng rng = Rng::derive(cfg.seed, "symplectic/scaling-detects");
    CotangentPoint p = random_point(n, rng);
    auto map = [](const CotangentPoint& q) {
      return CotangentPoint{q.x, 2.0 * q.xi};
    };
    const double err = pullback_error(map, p, 1e-5);
    cases.push_back(make_flag_case("symplectic/scaling-detected", err >= 0.5,
                                   {{"pullback_error", err}}));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// suite: moment (moment maps, sampler, rank criterion, Hamiltonian identity)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_moment(const RunConfig& cfg) {
  std::vector<CaseResult> cases;
  const int n = cfg.n;

  {
    Rng rng = Rng::derive(cfg.seed, "moment/equivariance");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      CotangentPoint p = random_point(n, rng);
      const CMat g = random_su(n, rng);
      const CotangentPoint gp{g * p.x, p.xi};
      worst = std::max(worst, (moment(gp) - adjoint_action(g, moment(p))).norm());
      worst = std::max(
          worst, (nilpotent_moment(gp) - adjoint_action(g, nilpotent_moment(p))).norm());
    }
    cases.push_back(make_case("moment/equivariance", worst, cfg.tol("equivariance", 1e-12)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "moment/twist-preserves");
    const TwistProfile profile(cfg.profile_cutoff);
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point(n, rng);
        worst = std::max(worst, (moment(tau(p, i, profile)) - moment(p)).norm());
      }
    }
    cases.push_back(
        make_case("moment/twist-preservation", worst, cfg.tol("mu_preservation", 1e-9)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "moment/sampler");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const RVec p = random_chamber(n, rng, false);
      const CotangentPoint pt = sample_fiber(p, rng);
      CMat target = CMat::Zero(n, n);
      for (int j = 0; j < n; ++j) target(j, j) = p(j);
      worst = std::max(worst, (moment(pt) - target).norm());
      worst = std::max(worst, pt.xi.diagonal().norm());
    }
    cases.push_back(make_case("moment/sample-round-trip", worst, cfg.tol("sampler", 1e-9)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "moment/rank-criterion");
    bool agree = true;
    nlohmann::json detail = nlohmann::json::array();
    for (int rep = 0; rep < 4; ++rep) {
      for (bool singular : {false, true}) {
        // no strictly decreasing 2-vector has a zero proper subset sum
        if (singular && n < 3) continue;
        const RVec p = random_chamber(n, rng, singular);
        const Chamber chamber(p);
        const bool predicted = is_singular_value(chamber);
        bool deficient_found = false;
        for (int k = 0; k < 25 && !deficient_found; ++k) {
          const CotangentPoint pt = sample_fiber(p, rng);
          if (moment_rank(pt) < full_moment_rank(n)) deficient_found = true;
        }
        if (predicted) {
          const auto subset = zero_subset_sum(p);
          const CotangentPoint witness = singular_fiber_witness(p, subset.subset, rng);
          deficient_found = moment_rank(witness) < full_moment_rank(n);
        }
        agree = agree && (predicted == deficient_found);
        detail.push_back({{"singular", singular}, {"agree", predicted == deficient_found}});
      }
    }
    cases.push_back(make_flag_case("moment/rank-vs-subset-sum", agree, {{"cases", detail}}));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "moment/hamiltonian");
    const auto basis = tangent_basis(n);
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      CotangentPoint p = random_point(n, rng);
      const CMat y = random_skew_traceless(n, rng);
      const TangentVector v = basis[static_cast<std::size_t>(rng.uniform() * basis.size())];
      worst = std::max(worst, hamiltonian_consistency(p, y, v));
    }
    cases.push_back(
        make_case("moment/hamiltonian-consistency", worst, cfg.tol("hamiltonian", 1e-6)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "moment/generator-field");
    double worst = 0.0;
    const double step = 1e-5;
    for (int k = 0; k < std::max(8, cfg.samples / 8); ++k) {
      CotangentPoint p = random_point(n, rng);
      const CMat y = random_skew_traceless(n, rng);
      const TangentVector gen = generator_field(p, y);
      auto flow = [&](double s) {
        CMat g = exp_skew(s * y);
        return align_to(CotangentPoint{g * p.x, p.xi}, p);
      };
      const CotangentPoint fp = flow(step);
      const CotangentPoint fm = flow(-step);
      const CMat vel = (p.x.adjoint() * (fp.x - fm.x)) / (2.0 * step);
      const CMat a_full = skew_part(vel);
      const CMat delta = diag_part(a_full);
      const CMat a = a_full - delta;
      CMat eta = hermitize((fp.xi - fm.xi) / (2.0 * step)) + commutator(delta, p.xi);
      worst = std::max(worst, (a - gen.a).norm());
      worst = std::max(worst, (zero_diag(eta) - gen.eta).norm());
      // moment transport along the flow
      const CMat dmu =
          (moment(CotangentPoint{exp_skew(step * y) * p.x, p.xi}) -
           moment(CotangentPoint{exp_skew(-step * y) * p.x, p.xi})) /
          (2.0 * step);
      worst = std::max(worst, (dmu - commutator(y, moment(p))).norm());
    }
    cases.push_back(make_case("moment/generator-field", worst, cfg.tol("generator", 1e-6)));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// suite: springer (Jordan types, normal form, census)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_springer(const RunConfig& cfg) {
  std::vector<CaseResult> cases;

  {
    Rng rng = Rng::derive(cfg.seed, "springer/conjugation");
    bool ok = true;
    for (int k = 0; k < std::max(16, cfg.samples / 4); ++k) {
      const int n = 3 + static_cast<int>(rng.uniform() * 2.999);
      CMat u = CMat::Zero(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
          if (rng.uniform() < 0.75) u(r, c) = rng.complex_normal();
      Rng g_rng(rng.next_u64());
      const CMat g = random_su(n, g_rng);
      ok = ok && (jordan_partition(u) == jordan_partition(adjoint_action(g, u)));
    }
    cases.push_back(make_flag_case("springer/conjugation-invariance", ok));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "springer/subregular-locus");
    const double N = 1.0;
    bool ok = true;
    for (int k = 0; k < cfg.samples; ++k) {
      // interior points are regular
      CotangentPoint pt = sample_fiber(RVec{{N, 0.0, -N}}, rng);
      const ReducedChart3 c = project_chart(pt.xi);
      const bool boundary = c.m12 * c.m23 <= 1e-12;
      const SpringerClass cls = springer_class(pt);
      if (!boundary && cls != SpringerClass::Regular) ok = false;
      // edge points are subregular
      const double a = rng.uniform(0.05, 0.95);
      for (int edge : {12, 23}) {
        const CMat xi = lift_chart(edge_point(edge, a, N));
        HermEigs eig = hermitian_eigs(xi);
        CotangentPoint ep{CMat(eig.vectors.adjoint()), xi};
        if (springer_class(ep) != SpringerClass::Subregular) ok = false;
      }
      const CMat xi31 = lift_chart(edge_point(31, a, N));
      HermEigs eig = hermitian_eigs(xi31);
      CotangentPoint ep{CMat(eig.vectors.adjoint()), xi31};
      if (springer_class(ep) != SpringerClass::Regular) ok = false;
    }
    cases.push_back(make_flag_case("springer/subregular-locus", ok));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "springer/normal-form");
    double worst = 0.0;
    bool range_ok = true;
    for (int n : {3, 4, 5}) {
      for (int k = 0; k < cfg.samples; ++k) {
        const CotangentPoint pt = sample_fiber(pivot_value(n), rng);
        const FiberNormalForm f = fiber_normal_form(pt);
        const NormalFormResiduals r = normal_form_residuals(f);
        worst = std::max({worst, r.pair_mismatch, r.magnitude_mismatch, r.tail});
        range_ok = range_ok && f.epsilon >= 0.0 && f.epsilon <= 1.0;
      }
    }
    auto c = make_case("springer/normal-form-residuals", worst, cfg.tol("normal_form", 1e-8));
    enforce(c, range_ok);
    c.details["epsilon_in_range"] = range_ok;
    cases.push_back(c);
  }
  {
    Rng rng = Rng::derive(cfg.seed, "springer/hook-census");
    nlohmann::json detail;
    bool contained = true;
    for (int n : {3, 4}) {
      const HookCensus census = hook_census(pivot_value(n), std::min(cfg.samples, 200), rng);
      nlohmann::json table = nlohmann::json::object();
      for (const auto& [part, count] : census.counts) {
        table[part.str()] = count;
        // nondegenerate hook types: (k, 1, 1, ...) with k > 1
        const bool hook = part.parts.size() >= 1 && part.parts[0] > 1 &&
                          std::all_of(part.parts.begin() + 1, part.parts.end(),
                                      [](int v) { return v == 1; });
        contained = contained && hook;
      }
      detail[std::to_string(n)] = table;
    }
    cases.push_back(make_flag_case("springer/hook-census", contained, detail));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// suite: twist (fiberwise Dehn twist verification)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_twist(const RunConfig& cfg) {
  std::vector<CaseResult> cases;
  const TwistProfile profile(cfg.profile_cutoff);
  const int n = cfg.n;

  {
    Rng rng = Rng::derive(cfg.seed, "twist/equivariance");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point(n, rng);
        const CMat g = random_su(n, rng);
        const CotangentPoint a = tau(CotangentPoint{g * p.x, p.xi}, i, profile);
        const CotangentPoint b = tau(p, i, profile);
        worst = std::max(worst, points_distance(a, CotangentPoint{g * b.x, b.xi}));
      }
    cases.push_back(make_case("twist/equivariance", worst, cfg.tol("equivariance", 1e-12)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/identity-at-infinity");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point_guarded(n, i, rng, 0.05, 2.0);
        p.xi *= (profile.cutoff() + rng.uniform(0.0, 2.0)) /
                root_component(p.xi, i).modulus;
        if (root_component(p.xi, i).modulus < profile.cutoff()) continue;
        worst = std::max(worst, points_distance(tau(p, i, profile), p));
      }
    cases.push_back(
        make_case("twist/identity-at-infinity", worst, cfg.tol("identity", 1e-9)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/round-trip");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point(n, rng);
        worst = std::max(worst,
                         points_distance(tau_inverse(tau(p, i, profile), i, profile), p));
      }
    cases.push_back(make_case("twist/round-trip", worst, cfg.tol("round_trip", 1e-8)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/symplectic");
    double worst = 0.0;
    const int pts = std::max(8, cfg.samples / 8);
    for (int k = 0; k < pts; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point_guarded(n, i, rng, kBranchGuard);
        auto map = [&](const CotangentPoint& q) { return tau(q, i, profile); };
        worst = std::max(worst, pullback_error(map, p, 1e-5));
      }
    cases.push_back(make_case("twist/symplectic", worst, cfg.tol("symplectic", 1e-5)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/hamiltonian-field");
    double worst = 0.0;
    for (int k = 0; k < std::max(8, cfg.samples / 4); ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point_guarded(n, i, rng, kBranchGuard);
        worst = std::max(worst, hamiltonian_field_check(p, i, profile));
      }
    cases.push_back(
        make_case("twist/hamiltonian-field", worst, cfg.tol("hamiltonian_field", 1e-5)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/branch-continuity");
    double worst = 0.0;
    for (int k = 0; k < std::max(8, cfg.samples / 4); ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CotangentPoint p = random_point(n, rng);
        p.xi(i - 1, i) = 0.0;
        p.xi(i, i - 1) = 0.0;
        const CotangentPoint base = tau(p, i, profile);
        CotangentPoint near = p;
        const double epsilon = 1e-8;
        const Complex phase = std::exp(kI * rng.angle());
        near.xi(i - 1, i) = epsilon * phase;
        near.xi(i, i - 1) = epsilon * std::conj(phase);
        worst = std::max(worst, points_distance(tau(near, i, profile), base));
      }
    cases.push_back(
        make_case("twist/branch-continuity", worst, cfg.tol("continuity", 1e-6)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "twist/steinberg");
    double slope_err = 0.0;
    bool exact_zero = true;
    for (int k = 0; k < 8; ++k)
      for (int i = 1; i <= n - 1; ++i) {
        CMat seed = CMat::Zero(n, n);
        const Complex phase = std::exp(kI * rng.angle());
        const double m0 = rng.uniform(0.2, 0.6) * profile.cutoff();
        seed(i - 1, i) = m0 * phase;
        seed(i, i - 1) = m0 * std::conj(phase);
        CMat perp = random_herm_zero_diag(n, rng);
        perp(i - 1, i) = 0.0;
        perp(i, i - 1) = 0.0;
        perp *= 2.0 / perp.norm();  // fixed direction scale keeps the fit clean
        const CMat x = random_su(n, rng);
        const DecayLadder ladder = steinberg_decay(x, seed, perp, i, profile);
        slope_err = std::max(slope_err, std::abs(ladder.slope + 1.0));

        CotangentPoint p = random_point_guarded(n, i, rng, 0.3);
        const double m = root_component(p.xi, i).modulus;
        const double s_sat = 2.0 * profile.cutoff() / m;
        exact_zero = exact_zero &&
                     steinberg_ratio_scaled(p, i, profile, s_sat) == 0.0;
      }
    auto c = make_case("twist/steinberg-decay", slope_err, cfg.tol("steinberg_slope", 0.05));
    enforce(c, exact_zero);
    c.details["saturated_ratio_exactly_zero"] = exact_zero;
    cases.push_back(c);
  }
  return cases;
}

// ---------------------------------------------------------------------------
// suite: figure1 (SU(3) reduced chart and the braid-generator action)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_figure1(const RunConfig& cfg) {
  std::vector<CaseResult> cases;
  const TwistProfile profile(cfg.profile_cutoff);
  const double N = cfg.figure_scale * cfg.profile_cutoff;

  {
    Rng rng = Rng::derive(cfg.seed, "figure1/chart-constraints");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const CotangentPoint pt = sample_fiber(RVec{{N, 0.0, -N}}, rng);
      const ReducedChart3 c = project_chart(pt.xi);
      for (int i : {1, 2}) {
        const ReducedChart3 image = tau_reduced(c, i, profile);
        worst = std::max(worst, image.constraint_sum_residual());
        worst = std::max(worst, image.constraint_product_residual() /
                                    std::max(1.0, std::pow(N, 6)));
      }
    }
    cases.push_back(
        make_case("figure1/chart-constraints", worst, cfg.tol("chart", 1e-9)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "figure1/round-trip");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const CotangentPoint pt = sample_fiber(RVec{{N, 0.0, -N}}, rng);
      const ReducedChart3 c = project_chart(pt.xi);
      for (int i : {1, 2}) {
        const ReducedChart3 back = tau_reduced(tau_reduced(c, i, profile), i, profile, true);
        worst = std::max({worst, std::abs(back.m12 - c.m12), std::abs(back.m13 - c.m13),
                          std::abs(back.m23 - c.m23), std::abs(back.nu - c.nu)});
      }
    }
    cases.push_back(make_case("figure1/round-trip", worst, cfg.tol("round_trip", 1e-8)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "figure1/lift-well-defined");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const CotangentPoint pt = sample_fiber(RVec{{N, 0.0, -N}}, rng);
      const ReducedChart3 c = project_chart(pt.xi);
      const ReducedChart3 via_lift = project_chart(lift_chart(c));
      worst = std::max({worst, std::abs(via_lift.m12 - c.m12),
                        std::abs(via_lift.m13 - c.m13), std::abs(via_lift.m23 - c.m23),
                        std::abs(via_lift.nu - c.nu)});
      // the induced map must not depend on the lift representative
      for (int i : {1, 2}) {
        const ReducedChart3 a = tau_reduced(c, i, profile);
        const CotangentPoint tw = tau(pt, i, profile);
        const ReducedChart3 b = project_chart(tw.xi);
        worst = std::max({worst, std::abs(a.m12 - b.m12), std::abs(a.m13 - b.m13),
                          std::abs(a.m23 - b.m23), std::abs(a.nu - b.nu)});
      }
    }
    cases.push_back(
        make_case("figure1/lift-well-defined", worst, cfg.tol("lift", 1e-9)));
  }
  {
    const nlohmann::json rep = figure1_report(1, N, std::max(64, cfg.samples), profile);
    const bool ok = rep.at("reversed_23").get<bool>() &&
                    rep.at("interior_hits_23").get<int>() == 0 &&
                    rep.at("interior_hits_31").get<int>() == 0 &&
                    rep.at("vertex_permutation") == nlohmann::json::array({1, 3, 2});
    cases.push_back(make_flag_case("figure1/pattern-alpha1", ok, rep));
  }
  {
    const TwistProfile p2(cfg.profile_cutoff);
    const auto perm2 = vertex_permutation(2, N, p2);
    const bool ok = perm2 == std::array<int, 3>{2, 1, 3};
    // braid relation at the permutation level
    const auto perm1 = vertex_permutation(1, N, p2);
    auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
      std::array<int, 3> out{};
      for (int j = 0; j < 3; ++j) out[j] = f[g[j] - 1];
      return out;
    };
    const auto lhs = compose(perm1, compose(perm2, perm1));
    const auto rhs = compose(perm2, compose(perm1, perm2));
    cases.push_back(make_flag_case("figure1/vertex-permutations", ok && lhs == rhs,
                                   {{"perm1", perm1}, {"perm2", perm2}}));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "figure1/scale-equivariance");
    double worst = 0.0;
    for (int k = 0; k < std::max(8, cfg.samples / 4); ++k) {
      const CotangentPoint pt = sample_fiber(RVec{{N, 0.0, -N}}, rng);
      const ReducedChart3 c = project_chart(pt.xi);
      const double s = rng.uniform(0.5, 2.0);
      const ReducedChart3 cs = project_chart(CMat(s * pt.xi));
      worst = std::max({worst, std::abs(cs.m12 - s * s * c.m12),
                        std::abs(cs.m13 - s * s * c.m13),
                        std::abs(cs.m23 - s * s * c.m23),
                        std::abs(cs.nu - s * s * s * c.nu)});
      // the twist commutes with rescaling when the cutoff rescales with it
      const TwistProfile scaled(cfg.profile_cutoff * s);
      for (int i : {1, 2}) {
        const ReducedChart3 a = tau_reduced(cs, i, scaled);
        const ReducedChart3 b = tau_reduced(c, i, TwistProfile(cfg.profile_cutoff));
        worst = std::max({worst, std::abs(a.m12 - s * s * b.m12),
                          std::abs(a.m13 - s * s * b.m13),
                          std::abs(a.m23 - s * s * b.m23),
                          std::abs(a.nu - s * s * s * b.nu)});
      }
    }
    cases.push_back(
        make_case("figure1/scale-equivariance", worst, cfg.tol("scale", 1e-8)));
  }
  return cases;
}

// ---------------------------------------------------------------------------
// suite: localmodels (Sp(4) circle-equivariant group and blow-up chart)
// ---------------------------------------------------------------------------

std::vector<CaseResult> suite_localmodels(const RunConfig& cfg) {
  std::vector<CaseResult> cases;

  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/round-trip");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const Sp4Equivariant e = random_sp4(rng);
      const Eigen::Matrix4d m = sp4_matrix(e);
      double res = 0.0;
      const auto back = sp4_membership(m, 1e-8, &res);
      worst = std::max(worst, res);
      if (back) worst = std::max(worst, (sp4_matrix(*back) - m).norm());
      // closure under composition and inverse
      const Sp4Equivariant f = random_sp4(rng);
      worst = std::max(worst, (sp4_matrix(sp4_compose(e, f)) - m * sp4_matrix(f)).norm());
      worst = std::max(
          worst, (sp4_matrix(sp4_inverse(e)) * m - Eigen::Matrix4d::Identity()).norm());
    }
    cases.push_back(make_case("localmodels/round-trips", worst, cfg.tol("sp4", 1e-9)));
  }
  {
    // a symplectic but non-equivariant shear must be rejected
    Eigen::Matrix4d shear = Eigen::Matrix4d::Identity();
    shear(0, 1) = 0.7;
    double res = 0.0;
    const auto verdict = sp4_membership(shear, 1e-9, &res);
    cases.push_back(make_flag_case("localmodels/shear-rejected",
                                   !verdict.has_value() && res > 1e-3,
                                   {{"residual", res}}));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/rays");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const Sp4Equivariant e = random_sp4(rng);
      const auto closed = induced_rays(e);
      const auto numeric = induced_rays_numeric(e);
      worst = std::max(worst, std::abs(closed.first - numeric.first));
      worst = std::max(worst, std::abs(closed.second - numeric.second));
    }
    cases.push_back(make_case("localmodels/rays-transport", worst, cfg.tol("rays", 1e-6)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/central");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const Sp4Equivariant c = sp4_center(rng.angle());
      const auto rays = induced_rays(c);
      worst = std::max(worst, std::abs(rays.first - Complex(1.0)));
      worst = std::max(worst, std::abs(rays.second - Complex(-1.0)));
      worst = std::max(worst, sp4_centrality_residual(c));
      // non-central elements stay away from (1, -1)
      Sp4Equivariant e = random_sp4(rng);
      e.lambda2 = std::max(e.lambda2, 0.1);
      e.lambda1 = std::sqrt(1.0 + e.lambda2 * e.lambda2);
      e.theta3 = wrap_angle(e.theta2 + e.theta4 - e.theta1);
      const auto r = induced_rays(e);
      const double gap =
          std::max(std::abs(r.first - Complex(1.0)), std::abs(r.second - Complex(-1.0)));
      if (gap < 1e-6) worst = std::max(worst, 1.0);
      // equal rays imply equal mod center
      const Sp4Equivariant ce = sp4_compose(sp4_center(rng.angle()), e);
      const auto r2 = induced_rays(ce);
      worst = std::max(worst, std::abs(r.first - r2.first));
      worst = std::max(worst, std::abs(r.second - r2.second));
      const Eigen::Vector4d ia = sp4_center_invariants(e);
      const Eigen::Vector4d ib = sp4_center_invariants(ce);
      worst = std::max({worst, std::abs(ia(0) - ib(0)), std::abs(ia(1) - ib(1)),
                        std::abs(wrap_angle(ia(2) - ib(2))),
                        std::abs(wrap_angle(ia(3) - ib(3)))});
    }
    cases.push_back(make_case("localmodels/central-rays", worst, cfg.tol("central", 1e-8)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/solve");
    double worst = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
      const double ap = rng.angle();
      double am = rng.angle();
      if (std::abs(wrap_angle(ap - am)) < 1e-3) am = wrap_angle(am + 1.0);
      const Sp4Equivariant e = solve_for_rays(ap, am);
      const auto rays = induced_rays(e);
      worst = std::max(worst, std::abs(wrap_angle(std::arg(rays.first) - ap)));
      worst = std::max(worst, std::abs(wrap_angle(std::arg(rays.second) - am)));
    }
    cases.push_back(make_case("localmodels/solve-for-rays", worst, cfg.tol("solve", 1e-8)));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/winding");
    Sp4Equivariant e = random_sp4(rng);
    e.lambda2 = 0.8;
    e.lambda1 = std::sqrt(1.0 + e.lambda2 * e.lambda2);
    int winding = 0;
    double prev = 0.0;
    const int steps = 360;
    for (int k = 0; k <= steps; ++k) {
      e.theta4 = -kPi + 2.0 * kPi * k / steps;
      e.theta3 = wrap_angle(e.theta2 + e.theta4 - e.theta1);
      const double arg = std::arg(induced_rays(e).first);
      if (k > 0) {
        double d = arg - prev;
        if (d > kPi) winding -= 1;
        if (d < -kPi) winding += 1;
      }
      prev = arg;
    }
    cases.push_back(make_flag_case("localmodels/winding", winding == 1,
                                   {{"winding", winding}}));
  }
  {
    Rng rng = Rng::derive(cfg.seed, "localmodels/blowup");
    const BlowupReport r = blowup_checks(0.5, 0.25, 2, std::max(100, cfg.samples), rng);
    double worst = std::max(r.transition_symplectic, r.transition_roundtrip);
    worst = std::max(worst, r.moment_agreement);
    worst = std::max(worst, r.equivariance);
    worst = std::max(worst, std::abs(r.weight0 + 1.0));
    worst = std::max(worst, std::abs(r.weight1 - 1.0));
    auto c = make_case("localmodels/blowup", worst, cfg.tol("blowup", 1e-6));
    enforce(c, r.min_gradient > 1e-3);
    c.details = {{"transition_symplectic", r.transition_symplectic},
                 {"moment_agreement", r.moment_agreement},
                 {"min_gradient", r.min_gradient},
                 {"weights", {r.weight0, r.weight1}}};
    cases.push_back(c);
  }
  return cases;
}

}  // namespace

std::string version_string() { return "flagtwist 0.1.0"; }

double RunConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

nlohmann::json RunConfig::to_json() const {
  return {{"n", n},
          {"seed", seed},
          {"samples", samples},
          {"profile_cutoff", profile_cutoff},
          {"figure_scale", figure_scale},
          {"tolerances", tolerances}};
}

bool SuiteReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"symplectic", "moment",   "springer",
                                              "twist",      "figure1", "localmodels"};
  return names;
}

std::vector<std::pair<std::string, std::string>> suite_descriptions() {
  return {
      {"symplectic",
       "chart form: antisymmetry, nondegeneracy, torus-representative invariance, "
       "left-action pullback"},
      {"moment",
       "moment maps: equivariance, twist preservation, fiber sampler round trip, "
       "rank vs subset-sum criterion, Hamiltonian consistency"},
      {"springer",
       "Jordan types: conjugation invariance, SU(3) subregular locus, bordered "
       "normal form residuals, hook census"},
      {"twist",
       "fiberwise twist: equivariance, identity at infinity, inverse round trip, "
       "symplectic pullback, Hamiltonian field, branch continuity, decay ladder"},
      {"figure1",
       "SU(3) reduced chart: constraint preservation, bijection, lift independence, "
       "edge traces, vertex permutations, scale equivariance"},
      {"localmodels",
       "circle-equivariant Sp(4): parameter round trips, reduced rays, centrality, "
       "ray solver, winding, blow-up chart checks"},
  };
}

SuiteReport run_suite(const std::string& suite, const RunConfig& config) {
  SuiteReport report;
  report.suite = suite;
  if (suite == "symplectic") report.cases = suite_symplectic(config);
  else if (suite == "moment") report.cases = suite_moment(config);
  else if (suite == "springer") report.cases = suite_springer(config);
  else if (suite == "twist") report.cases = suite_twist(config);
  else if (suite == "figure1") report.cases = suite_figure1(config);
  else if (suite == "localmodels") report.cases = suite_localmodels(config);
  else throw std::invalid_argument("unknown suite: " + suite);
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return report;
}

SuiteReport run_verify(const std::string& suite, const RunConfig& config) {
  if (suite != "all") return run_suite(suite, config);
  SuiteReport report;
  report.suite = "all";
  for (const auto& name : suite_names()) {
    SuiteReport sub = run_suite(name, config);
    for (auto& c : sub.cases) report.cases.push_back(std::move(c));
  }
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report, const RunConfig& config) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : report.cases) {
    cases.push_back({{"name", c.name},
                     {"status", c.pass ? "pass" : "fail"},
                     {"max_error", c.max_error},
                     {"tolerance", c.tolerance},
                     {"details", c.details}});
  }
  return {{"version", version_string()},
          {"suite", report.suite},
          {"config", config.to_json()},
          {"cases", cases}};
}

// ---------------------------------------------------------------------------
// CLI payloads
// ---------------------------------------------------------------------------

nlohmann::json figure1_report(int alpha, double N, int samples,
                              const TwistProfile& profile) {
  const EdgeTrace edge12 = trace_edge_image(alpha, 12, samples, N, profile);
  const EdgeTrace edge23 = trace_edge_image(alpha, 23, samples, N, profile);
  const auto perm = vertex_permutation(alpha, N, profile);
  nlohmann::json interval = nlohmann::json::array();
  for (const auto& iv : edge12.on_own_edge) interval.push_back({iv.lo, iv.hi});
  return {{"alpha", alpha},
          {"N", N},
          {"samples", samples},
          {"reversed_23", edge23.reversed},
          {"interior_hits_23", edge12.interior_hits[1]},
          {"interior_hits_31", edge12.interior_hits[2]},
          {"on_edge_12_interval", interval},
          {"vertex_permutation", perm}};
}

std::string twist_trajectory_csv(const CotangentPoint& p, int alpha,
                                 const TwistProfile& profile, int steps) {
  const int n = p.dim();
  std::ostringstream out;
  out.precision(17);
  out << "t";
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out << ",xi_" << r << c << "_re,xi_" << r << c << "_im";
  out << "\n";
  const RootComponent rc = root_component(p.xi, alpha);
  for (int k = 0; k < steps; ++k) {
    const double t = steps == 1 ? 1.0 : static_cast<double>(k) / (steps - 1);
    CMat xi_t;
    if (rc.modulus == 0.0) {
      // rotate towards the Weyl element, reached at t = 1
      const CMat e = root_plane_rotation(alpha, n, Complex(1.0), t * 0.5 * kPi);
      xi_t = e.adjoint() * p.xi * e;
    } else {
      const double theta = t * profile.h(rc.modulus);
      const CMat e = root_plane_rotation(alpha, n, p.xi(alpha - 1, alpha) / rc.modulus,
                                         theta);
      xi_t = e.adjoint() * p.xi * e;
    }
    out << t;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        out << "," << xi_t(r, c).real() << "," << xi_t(r, c).imag();
    out << "\n";
  }
  return out.str();
}

std::string edge_trajectory_csv(int alpha, int edge, int samples, double N,
                                const TwistProfile& profile) {
  const EdgeTrace trace = trace_edge_image(alpha, edge, samples, N, profile);
  std::ostringstream out;
  out.precision(17);
  out << "t,m12,m13,m23,nu\n";
  for (std::size_t k = 0; k < trace.param.size(); ++k) {
    const auto& c = trace.image[k];
    out << trace.param[k] << "," << c.m12 << "," << c.m13 << "," << c.m23 << ","
        << c.nu << "\n";
  }
  return out.str();
}

std::string springer_csv(const RVec& p, int samples, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "springer-csv");
  const int n = static_cast<int>(p.size());
  RVec pivot = pivot_value(n);
  const bool pivot_fiber = (p - pivot).norm() < 1e-12;
  std::ostringstream out;
  out.precision(17);
  out << "sample_id,partition,epsilon,m12,m13,m23\n";
  for (int k = 0; k < samples; ++k) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const Partition part = jordan_partition(strict_upper(pt.xi));
    double eps = std::numeric_limits<double>::quiet_NaN();
    if (pivot_fiber && n >= 3) eps = fiber_normal_form(pt).epsilon;
    out << k << "," << part.str() << "," << eps;
    if (n >= 3)
      out << "," << std::norm(pt.xi(0, 1)) << "," << std::norm(pt.xi(0, 2)) << ","
          << std::norm(pt.xi(1, 2));
    else
      out << "," << std::norm(pt.xi(0, 1)) << ",0,0";
    out << "\n";
  }
  return out.str();
}

nlohmann::json sample_fiber_json(const RVec& p, int count, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "sample-fiber");
  nlohmann::json arr = nlohmann::json::array();
  for (int k = 0; k < count; ++k) {
    nlohmann::json j;
    to_json(j, sample_fiber(p, rng));
    arr.push_back(std::move(j));
  }
  return arr;
}

// ---------------------------------------------------------------------------
// acceptance criteria
// ---------------------------------------------------------------------------

namespace {

CaseResult criterion_symplectic(std::uint64_t seed) {
  const TwistProfile profile(1.0);
  double worst = 0.0;
  for (int n : {2, 3}) {
    for (int i = 1; i <= n - 1; ++i) {
      Rng rng = Rng::derive(seed, "acc1/" + std::to_string(n) + "/" + std::to_string(i));
      for (int k = 0; k < 500; ++k) {
        CotangentPoint p = random_point_guarded(n, i, rng, 0.05);
        auto map = [&](const CotangentPoint& q) { return tau(q, i, profile); };
        worst = std::max(worst, pullback_error(map, p, 1e-5));
      }
    }
  }
  return make_case("1. twist symplecticity (500 pts, n=2,3, each root)", worst, 1e-5);
}

CaseResult criterion_hamiltonian_field(std::uint64_t seed) {
  const TwistProfile profile(1.0);
  Rng rng = Rng::derive(seed, "acc2");
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int i = 1 + static_cast<int>(rng.uniform() * 1.999);
    CotangentPoint p = random_point_guarded(3, i, rng, kBranchGuard);
    worst = std::max(worst, hamiltonian_field_check(p, i, profile));
  }
  return make_case("2. twist Hamiltonian identity (200 pts, n=3)", worst, 1e-5);
}

CaseResult criterion_mu_preservation(std::uint64_t seed) {
  const TwistProfile profile(1.0);
  Rng rng = Rng::derive(seed, "acc3");
  double mu_worst = 0.0;
  double eq_worst = 0.0;
  for (int i = 1; i <= 2; ++i) {
    for (int k = 0; k < 500; ++k) {
      CotangentPoint p = random_point(3, rng);
      const CotangentPoint tp = tau(p, i, profile);
      mu_worst = std::max(mu_worst, (moment(tp) - moment(p)).norm());
      const CMat g = random_su(3, rng);
      eq_worst = std::max(eq_worst,
                          points_distance(tau(CotangentPoint{g * p.x, p.xi}, i, profile),
                                          CotangentPoint{g * tp.x, tp.xi}));
    }
  }
  auto c = make_case("3. moment preservation and equivariance (500 pts/root)",
                     mu_worst, 1e-9);
  enforce(c, eq_worst <= 1e-12);
  c.details["equivariance"] = eq_worst;
  return c;
}

CaseResult criterion_edge_formula(std::uint64_t seed) {
  const TwistProfile profile(1.0);
  Rng rng = Rng::derive(seed, "acc4");
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double a = rng.uniform(0.02, 0.98);
    const double b = std::sqrt(1.0 - a * a);
    const double N = rng.uniform(0.2, 3.0);
    CMat xi = CMat::Zero(3, 3);
    xi(0, 1) = kI * (N * a);
    xi(1, 0) = -kI * (N * a);
    xi(0, 2) = N * b;
    xi(2, 0) = N * b;
    const CotangentPoint p{random_su(3, rng), xi};
    const CMat out = tau(p, 1, profile).xi;
    const double h = profile.h(N * a);
    worst = std::max(worst, std::abs(out(0, 2) - N * b * std::cos(h)));
    worst = std::max(worst, std::abs(out(1, 2) + N * b * std::sin(h)));
    worst = std::max(worst, std::abs(out(0, 1) - kI * (N * a)));
  }
  return make_case("4. SU(3) edge formula (100 random a,b,N)", worst, 1e-10);
}

CaseResult criterion_figure1(std::uint64_t) {
  const TwistProfile profile(1.0);
  const double N = 4.0;
  const int samples = 256;
  const nlohmann::json rep = figure1_report(1, N, samples, profile);
  bool ok = rep.at("reversed_23").get<bool>();
  ok = ok && rep.at("interior_hits_23").get<int>() == 0;
  ok = ok && rep.at("interior_hits_31").get<int>() == 0;
  ok = ok && rep.at("vertex_permutation") == nlohmann::json::array({1, 3, 2});
  const auto perm2 = vertex_permutation(2, N, profile);
  ok = ok && perm2 == std::array<int, 3>{2, 1, 3};
  // on-edge interval must match {a : h(Na) >= pi - 1e-3} within 1/samples
  double a_expected = 1.0;
  for (int k = 0; k <= 100000; ++k) {
    const double a = static_cast<double>(k) / 100000;
    if (profile.h(N * a) >= kPi - 1e-3) {
      a_expected = a;
      break;
    }
  }
  const auto intervals = rep.at("on_edge_12_interval");
  double gap = 1.0;
  if (intervals.size() == 1) {
    const double lo = intervals[0][0].get<double>();
    const double hi = intervals[0][1].get<double>();
    gap = std::max(std::abs(lo - a_expected), std::abs(hi - 1.0));
  }
  auto c = make_case("5. figure-1 pattern (N=4, 256 samples)", gap, 1.0 / samples);
  enforce(c, ok);
  c.details = rep;
  c.details["expected_interval_start"] = a_expected;
  return c;
}

CaseResult criterion_normal_form(std::uint64_t seed) {
  double worst = 0.0;
  bool range_ok = true;
  for (int n : {3, 4, 5}) {
    Rng rng = Rng::derive(seed, "acc6/" + std::to_string(n));
    for (int k = 0; k < 1000; ++k) {
      const CotangentPoint pt = sample_fiber(pivot_value(n), rng);
      const FiberNormalForm f = fiber_normal_form(pt);
      const NormalFormResiduals r = normal_form_residuals(f);
      worst = std::max({worst, r.pair_mismatch, r.magnitude_mismatch, r.tail});
      range_ok = range_ok && f.epsilon >= 0.0 && f.epsilon <= 1.0;
    }
  }
  auto c = make_case("6. bordered normal form residuals (1000 pts, n=3,4,5)", worst, 1e-8);
  enforce(c, range_ok);
  c.details["epsilon_in_range"] = range_ok;
  return c;
}

CaseResult criterion_singular_values(std::uint64_t seed) {
  bool agree = true;
  nlohmann::json detail = nlohmann::json::array();
  for (int n : {3, 4}) {
    Rng rng = Rng::derive(seed, "acc7/" + std::to_string(n));
    for (int rep = 0; rep < 10; ++rep) {
      for (bool singular : {true, false}) {
        const RVec p = random_chamber(n, rng, singular);
        const bool predicted = is_singular_value(Chamber(p));
        bool observed;
        if (singular) {
          const auto subset = zero_subset_sum(p);
          const CotangentPoint witness = singular_fiber_witness(p, subset.subset, rng);
          observed = moment_rank(witness) < full_moment_rank(n);
        } else {
          observed = false;
          for (int k = 0; k < 200 && !observed; ++k) {
            const CotangentPoint pt = sample_fiber(p, rng);
            if (moment_rank(pt) < full_moment_rank(n)) observed = true;
          }
        }
        if (predicted != observed) {
          agree = false;
          detail.push_back({{"n", n}, {"singular", singular}, {"predicted", predicted}});
        }
      }
    }
  }
  return make_flag_case("7. singular-value criterion (n=3,4; 20 chamber pts each)", agree,
                        {{"mismatches", detail}});
}

CaseResult criterion_definite_fibers(std::uint64_t seed) {
  bool all_regular = true;
  for (int n : {3, 4}) {
    Rng rng = Rng::derive(seed, "acc8/" + std::to_string(n));
    for (int k = 0; k < 1000; ++k) {
      RVec p(n);
      double sum = 0.0;
      for (int j = 0; j + 1 < n; ++j) {
        p(j) = rng.uniform(0.2, 1.0);
        sum += p(j);
      }
      p(n - 1) = -sum;
      std::sort(p.data(), p.data() + n, std::greater<double>());
      const CotangentPoint pt = sample_fiber(p, rng);
      if (springer_class(pt) != SpringerClass::Regular) all_regular = false;
    }
  }
  return make_flag_case("8. definite fibers are regular (1000 pts, n=3,4)", all_regular);
}

CaseResult criterion_steinberg(std::uint64_t seed) {
  const TwistProfile profile(1.0);
  double slope_err = 0.0;
  bool exact_zero = true;
  for (int n : {3, 4}) {
    Rng rng = Rng::derive(seed, "acc9/" + std::to_string(n));
    for (int rep = 0; rep < 10; ++rep) {
      const int i = 1 + static_cast<int>(rng.uniform() * (n - 1 - 1e-12));
      CMat seedm = CMat::Zero(n, n);
      const Complex phase = std::exp(kI * rng.angle());
      const double m0 = rng.uniform(0.2, 0.6);
      seedm(i - 1, i) = m0 * phase;
      seedm(i, i - 1) = m0 * std::conj(phase);
      CMat perp = random_herm_zero_diag(n, rng);
      perp(i - 1, i) = 0.0;
      perp(i, i - 1) = 0.0;
      perp *= 2.0 / perp.norm();
      const CMat x = random_su(n, rng);
      const DecayLadder ladder = steinberg_decay(x, seedm, perp, i, profile);
      slope_err = std::max(slope_err, std::abs(ladder.slope + 1.0));

      CotangentPoint p = random_point_guarded(n, i, rng, 0.3);
      const double m = root_component(p.xi, i).modulus;
      for (double s : {1.0, 2.0, 4.0}) {
        // nudge above the cutoff so rounding in s/m cannot drop s*m below it
        const double scale = s * profile.cutoff() * (1.0 + 1e-12) / m;
        if (steinberg_ratio_scaled(p, i, profile, scale) != 0.0) exact_zero = false;
      }
    }
  }
  auto c = make_case("9. steinberg decay slope -1 and exact saturation", slope_err, 0.05);
  enforce(c, exact_zero);
  c.details["saturated_exactly_zero"] = exact_zero;
  return c;
}

CaseResult criterion_sp4(std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "acc10");
  double round_trip = 0.0;
  double rays_gap = 0.0;
  double central_gap = 0.0;
  double solve_gap = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Sp4Equivariant e = random_sp4(rng);
    const Eigen::Matrix4d m = sp4_matrix(e);
    double res = 0.0;
    const auto back = sp4_membership(m, 1e-8, &res);
    round_trip = std::max(round_trip, res);
    if (back) round_trip = std::max(round_trip, (sp4_matrix(*back) - m).norm());

    const auto closed = induced_rays(e);
    const auto numeric = induced_rays_numeric(e);
    rays_gap = std::max(rays_gap, std::abs(closed.first - numeric.first));
    rays_gap = std::max(rays_gap, std::abs(closed.second - numeric.second));

    const Sp4Equivariant c = sp4_center(rng.angle());
    const auto cr = induced_rays(c);
    central_gap = std::max(central_gap, std::abs(cr.first - Complex(1.0)));
    central_gap = std::max(central_gap, std::abs(cr.second - Complex(-1.0)));
    central_gap = std::max(central_gap, sp4_centrality_residual(c));

    const double ap = rng.angle();
    double am = rng.angle();
    if (std::abs(wrap_angle(ap - am)) < 1e-3) am = wrap_angle(am + 1.0);
    const auto solved_rays = induced_rays(solve_for_rays(ap, am));
    solve_gap = std::max(solve_gap, std::abs(wrap_angle(std::arg(solved_rays.first) - ap)));
    solve_gap = std::max(solve_gap,
                         std::abs(wrap_angle(std::arg(solved_rays.second) - am)));
  }
  // winding of arg w+ over the theta4 circle
  Sp4Equivariant e = random_sp4(rng);
  e.lambda2 = 0.7;
  e.lambda1 = std::sqrt(1.0 + e.lambda2 * e.lambda2);
  int winding = 0;
  double prev = 0.0;
  for (int k = 0; k <= 360; ++k) {
    e.theta4 = -kPi + 2.0 * kPi * k / 360.0;
    e.theta3 = wrap_angle(e.theta2 + e.theta4 - e.theta1);
    const double arg = std::arg(induced_rays(e).first);
    if (k > 0) {
      const double d = arg - prev;
      if (d > kPi) winding -= 1;
      if (d < -kPi) winding += 1;
    }
    prev = arg;
  }
  auto c = make_case("10. circle-equivariant Sp(4) suite (200 elements)",
                     std::max(round_trip, central_gap), 1e-8);
  enforce(c, rays_gap <= 1e-6 && solve_gap <= 1e-8 && winding == 1);
  c.details = {{"round_trip", round_trip},
               {"rays_transport", rays_gap},
               {"central", central_gap},
               {"solve", solve_gap},
               {"winding", winding}};
  return c;
}

CaseResult criterion_blowup(std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "acc11");
  const BlowupReport r = blowup_checks(0.5, 0.25, 2, 10000, rng);
  double worst = r.transition_symplectic;
  auto c = make_case("11. blow-up chart (transition, moment, weights)", worst, 1e-9);
  enforce(c, r.moment_agreement == 0.0 && r.min_gradient > 1e-3 &&
              std::abs(r.weight0 + 1.0) <= 1e-6 && std::abs(r.weight1 - 1.0) <= 1e-6);
  c.details = {{"moment_agreement", r.moment_agreement},
               {"min_gradient", r.min_gradient},
               {"weights", {r.weight0, r.weight1}},
               {"roundtrip", r.transition_roundtrip},
               {"equivariance", r.equivariance}};
  return c;
}

CaseResult criterion_determinism(std::uint64_t seed) {
  RunConfig cfg;
  cfg.seed = seed;
  cfg.samples = 32;
  const std::string a = report_to_json(run_verify("all", cfg), cfg).dump(2);
  const std::string b = report_to_json(run_verify("all", cfg), cfg).dump(2);
  return make_flag_case("12. verify --suite all is byte-identical per seed", a == b,
                        {{"bytes", a.size()}});
}

}  // namespace

std::vector<CaseResult> acceptance_criteria(std::uint64_t seed) {
  std::vector<CaseResult> out;
  out.push_back(criterion_symplectic(seed));
  out.push_back(criterion_hamiltonian_field(seed));
  out.push_back(criterion_mu_preservation(seed));
  out.push_back(criterion_edge_formula(seed));
  out.push_back(criterion_figure1(seed));
  out.push_back(criterion_normal_form(seed));
  out.push_back(criterion_singular_values(seed));
  out.push_back(criterion_definite_fibers(seed));
  out.push_back(criterion_steinberg(seed));
  out.push_back(criterion_sp4(seed));
  out.push_back(criterion_blowup(seed));
  out.push_back(criterion_determinism(seed));
  return out;
}

}  // namespace flagtwist

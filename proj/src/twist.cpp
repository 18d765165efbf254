#include "flagtwist/twist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace flagtwist {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// Torus element diag(.., -1, -1, ..) = exp(pi * i u) for any unit u in the
// root plane; applying it entrywise keeps sign flips exact.
CotangentPoint apply_block_minus_one(const CotangentPoint& p, int i) {
  const int n = p.dim();
  CotangentPoint out = p;
  out.x.col(i - 1) = -out.x.col(i - 1);
  out.x.col(i) = -out.x.col(i);
  for (int k = 0; k < n; ++k) {
    if (k == i - 1 || k == i) continue;
    out.xi(i - 1, k) = -out.xi(i - 1, k);
    out.xi(k, i - 1) = -out.xi(k, i - 1);
    out.xi(i, k) = -out.xi(i, k);
    out.xi(k, i) = -out.xi(k, i);
  }
  return out;
}

CotangentPoint tau_impl(const CotangentPoint& p, int i, const TwistProfile& profile,
                        bool inverse) {
  const int n = p.dim();
  const RootComponent rc = root_component(p.xi, i);
  if (rc.modulus == 0.0) {
    CMat w = weyl_element(i, n);
    if (inverse) w = CMat(w.adjoint());
    CotangentPoint out{p.x * w, w.adjoint() * p.xi * w};
    // the root plane stays exactly empty under the Weyl branch
    out.xi = hermitize(zero_diag(out.xi));
    out.xi(i - 1, i) = 0.0;
    out.xi(i, i - 1) = 0.0;
    return out;
  }
  if (rc.modulus >= profile.cutoff()) return apply_block_minus_one(p, i);

  double theta = profile.h(rc.modulus);
  if (inverse) theta = -theta;
  const Complex entry = p.xi(i - 1, i);
  const Complex unit = entry / rc.modulus;
  const CMat e = root_plane_rotation(i, n, unit, theta);
  CotangentPoint out{p.x * e, e.adjoint() * p.xi * e};
  out.xi = hermitize(zero_diag(out.xi));
  // preserved exactly by the block structure
  out.xi(i - 1, i) = entry;
  out.xi(i, i - 1) = std::conj(entry);
  return out;
}
}  // namespace

TwistProfile::TwistProfile(double cutoff) : t0_(cutoff) {
  if (!(cutoff > 0.0)) throw std::invalid_argument("twist profile: cutoff > 0 required");
}

double TwistProfile::h(double t) const {
  const double s = t / t0_;
  if (s >= 1.0) return kPi;
  if (s <= -1.0) return 0.0;
  return 0.5 * kPi * (1.0 + 0.5 * (3.0 * s - s * s * s));
}

double TwistProfile::htilde(double t) const {
  // integral of (pi/2)(1 + (3s - s^3)/2) on |s| <= 1, constant slope outside
  auto core = [&](double s) {
    return 0.5 * kPi * (s * t0_ + t0_ * (0.75 * s * s - 0.125 * s * s * s * s));
  };
  const double s = t / t0_;
  if (s > 1.0) return core(1.0) + kPi * (t - t0_);
  if (s < -1.0) return core(-1.0);
  return core(s);
}

CotangentPoint tau(const CotangentPoint& p, int i, const TwistProfile& profile) {
  return tau_impl(p, i, profile, false);
}

CotangentPoint tau_inverse(const CotangentPoint& p, int i, const TwistProfile& profile) {
  return tau_impl(p, i, profile, true);
}

TangentVector twist_field(const CotangentPoint& p, int i, const TwistProfile& profile) {
  const RootComponent rc = root_component(p.xi, i);
  if (rc.modulus <= 0.0)
    throw std::invalid_argument("twist_field: undefined on the branch locus");
  const Complex kI(0.0, 1.0);
  const CMat iu = kI * (rc.part / rc.modulus);
  const double h = profile.h(rc.modulus);
  return {h * iu, -h * commutator(iu, p.xi)};
}

double twist_energy(const CotangentPoint& p, int i, const TwistProfile& profile) {
  const RootComponent rc = root_component(p.xi, i);
  return kTwistEnergyScale * profile.htilde(rc.modulus);
}

double hamiltonian_field_check(const CotangentPoint& p, int i,
                               const TwistProfile& profile, double step) {
  const RootComponent rc = root_component(p.xi, i);
  if (rc.modulus < kBranchGuard)
    throw std::invalid_argument("hamiltonian_field_check: inside branch guard band");
  const TangentVector field = twist_field(p, i, profile);
  double worst = 0.0;
  const Complex entry = p.xi(i - 1, i);
  for (const auto& v : tangent_basis(p.dim())) {
    // the energy depends on the point only through |xi_{i,i+1}|
    auto energy = [&](double t) {
      return kTwistEnergyScale * profile.htilde(std::abs(entry + t * v.eta(i - 1, i)));
    };
    const double dE = (energy(step) - energy(-step)) / (2.0 * step);
    const double flow = symplectic_form(p, field, v);
    worst = std::max(worst, std::abs(dE - flow));
  }
  return worst;
}

DecayLadder steinberg_decay(const CMat& x, const CMat& xi_seed, const CMat& xi_perp,
                            int i, const TwistProfile& profile, int rungs) {
  DecayLadder out;
  double sum_lx = 0.0, sum_ly = 0.0, sum_lxx = 0.0, sum_lxy = 0.0;
  int used = 0;
  for (int k = 0; k < rungs; ++k) {
    const double s = std::ldexp(1.0, k);  // 2^k
    const CMat xi = xi_seed + s * xi_perp;
    const CotangentPoint p{x, xi};
    const double num = (nilpotent_moment(tau(p, i, profile)) - nilpotent_moment(p)).norm();
    const double ratio = num / xi.norm();
    out.s.push_back(s);
    out.ratio.push_back(ratio);
    if (ratio > 0.0) {
      const double lx = std::log(s);
      const double ly = std::log(ratio);
      sum_lx += lx;
      sum_ly += ly;
      sum_lxx += lx * lx;
      sum_lxy += lx * ly;
      ++used;
    }
  }
  if (used >= 2) {
    const double denom = used * sum_lxx - sum_lx * sum_lx;
    out.slope = (used * sum_lxy - sum_lx * sum_ly) / denom;
  } else {
    out.slope = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

double steinberg_ratio_scaled(const CotangentPoint& p, int i,
                              const TwistProfile& profile, double s) {
  const CotangentPoint q{p.x, s * p.xi};
  const double num = (nilpotent_moment(tau(q, i, profile)) - nilpotent_moment(q)).norm();
  return num / (s * p.xi.norm());
}

TwistReport verify_twist(const CotangentPoint& p, int i, const TwistProfile& profile,
                         Rng& rng, double step) {
  TwistReport report;
  const CotangentPoint tp = tau(p, i, profile);

  const CMat g = random_su(p.dim(), rng);
  const CotangentPoint gp{g * p.x, p.xi};
  report.equivariance =
      points_distance(tau(gp, i, profile), CotangentPoint{g * tp.x, tp.xi});

  report.mu_preservation = (moment(tp) - moment(p)).norm();

  const RootComponent rc = root_component(p.xi, i);
  if (rc.modulus >= kBranchGuard) {
    auto map = [&](const CotangentPoint& q) { return tau(q, i, profile); };
    report.symplectic = pullback_error(map, p, step);
  } else {
    report.symplectic = std::numeric_limits<double>::quiet_NaN();
  }

  // ladder with the point's own root component as the fixed seed
  CMat seed = rc.part;
  if (rc.modulus == 0.0 || rc.modulus >= profile.cutoff()) {
    seed = CMat::Zero(p.dim(), p.dim());
    seed(i - 1, i) = 0.5 * profile.cutoff();
    seed(i, i - 1) = 0.5 * profile.cutoff();
  }
  const CMat perp = p.xi - rc.part;
  report.steinberg = steinberg_decay(p.x, seed, perp, i, profile);
  return report;
}

}  // namespace flagtwist

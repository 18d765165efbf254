#pragma once

#include <vector>

#include "flagtwist/moment.hpp"

namespace flagtwist {

// Twist profile h: R -> [0, pi], smooth nondecreasing, h(t) + h(-t) = pi,
// h = pi above the cutoff and 0 below -cutoff.  Default shape is the cubic
// smoothstep (pi/2)(1 + (3s - s^3)/2) on s = t/t0, clamped outside |s| <= 1.
class TwistProfile {
 public:
  explicit TwistProfile(double cutoff = 1.0);
  double cutoff() const { return t0_; }
  double h(double t) const;
  double htilde(double t) const;  // antiderivative with htilde(0) = 0

 private:
  double t0_;
};

// Fiberwise Dehn twist along the root plane i (1-based).  With m = |xi_a|
// and u = xi_a / m:
//   m > 0:  (x exp(h(m) i u), Ad_{exp(-h(m) i u)} xi)
//   m = 0:  (x w_i, Ad_{w_i^-1} xi)
// The root component of xi is preserved; the moment map is preserved; the
// map is G-equivariant and symplectic.
CotangentPoint tau(const CotangentPoint& p, int i, const TwistProfile& profile);
CotangentPoint tau_inverse(const CotangentPoint& p, int i, const TwistProfile& profile);

// Velocity of the t-parametrized twist family at t = 0:
//   X = (h(m) i u, -h(m) [i u, xi]).
TangentVector twist_field(const CotangentPoint& p, int i, const TwistProfile& profile);

// Generating function of the twist flow in this chart.  The entry-modulus
// norm counts the two root-plane entries of the pairing once each and the
// flow direction is negative relative to the form, so the generator is
// -2 * htilde(m); the scale is recorded here once.
inline constexpr double kTwistEnergyScale = -2.0;
double twist_energy(const CotangentPoint& p, int i, const TwistProfile& profile);

// max over a tangent basis v of |dE(v) - omega(X, v)| with E = twist_energy
// differentiated by central differences.  Requires m away from the branch
// locus (guard band).
double hamiltonian_field_check(const CotangentPoint& p, int i,
                               const TwistProfile& profile, double step = 1e-5);

inline constexpr double kBranchGuard = 0.05;

// Nilpotent-moment displacement ladder: with the root component held fixed
// and the complement scaled by s = 2^k, the displacement norm is constant,
// so ratio(s) ~ c/s.  slope is the least-squares log-log fit.
struct DecayLadder {
  std::vector<double> s;
  std::vector<double> ratio;
  double slope = 0.0;
};
DecayLadder steinberg_decay(const CMat& x, const CMat& xi_seed, const CMat& xi_perp,
                            int i, const TwistProfile& profile, int rungs = 11);

// ||mu_c(tau(x, s xi)) - mu_c(x, s xi)|| / (s ||xi||); exactly 0.0 once
// s * m >= cutoff (the twist saturates to a torus element).
double steinberg_ratio_scaled(const CotangentPoint& p, int i,
                              const TwistProfile& profile, double s);

struct TwistReport {
  double equivariance = 0.0;      // points distance of tau(g p) vs g tau(p)
  double mu_preservation = 0.0;   // ||mu(tau p) - mu(p)||
  double symplectic = 0.0;        // pullback error (NaN if inside guard band)
  DecayLadder steinberg;
};
TwistReport verify_twist(const CotangentPoint& p, int i, const TwistProfile& profile,
                         Rng& rng, double step = 1e-5);

}  // namespace flagtwist

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/twist.hpp"

using namespace flagtwist;

namespace {
const Complex I(0.0, 1.0);
constexpr double kPi = 3.141592653589793238462643383279502884;
}  // namespace

TEST_CASE("twist profile shape") {
  const TwistProfile profile(1.0);
  CHECK(profile.h(0.0) == doctest::Approx(0.5 * kPi));
  CHECK(profile.h(1.0) == kPi);
  CHECK(profile.h(-1.0) == 0.0);
  CHECK(profile.h(7.0) == kPi);
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    const double t = rng.uniform(-3.0, 3.0);
    CHECK(profile.h(t) + profile.h(-t) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(profile.h(t) >= -1e-15);
    CHECK(profile.h(t) <= kPi + 1e-15);
    // its stated antiderivative differentiates back to h
    const double fd = (profile.htilde(t + 1e-6) - profile.htilde(t - 1e-6)) / 2e-6;
    CHECK(std::abs(fd - profile.h(t)) <= 1e-8);
    // nondecreasing
    CHECK(profile.h(t + 1e-4) >= profile.h(t) - 1e-15);
  }
  // C1 smoothness at the clamp
  const double left = (profile.h(1.0) - profile.h(1.0 - 1e-6)) / 1e-6;
  CHECK(std::abs(left) <= 1e-5);
  CHECK_THROWS(TwistProfile(0.0));
}

TEST_CASE("su(3) edge formula is reproduced entrywise") {
  const TwistProfile profile(1.0);
  Rng rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const double a = rng.uniform(0.02, 0.98);
    const double b = std::sqrt(1.0 - a * a);
    const double N = rng.uniform(0.2, 3.0);
    CMat xi = CMat::Zero(3, 3);
    xi(0, 1) = I * (N * a);
    xi(1, 0) = -I * (N * a);
    xi(0, 2) = N * b;
    xi(2, 0) = N * b;
    const CotangentPoint p{random_su(3, rng), xi};
    const CMat out = tau(p, 1, profile).xi;
    const double h = profile.h(N * a);
    CHECK(std::abs(out(0, 1) - I * (N * a)) <= 1e-12);
    CHECK(std::abs(out(0, 2) - N * b * std::cos(h)) <= 1e-10);
    CHECK(std::abs(out(1, 2) + N * b * std::sin(h)) <= 1e-10);
    CHECK(out.diagonal().norm() == 0.0);
  }
}

TEST_CASE("twist at saturated modulus is the identity point") {
  const TwistProfile profile(1.0);
  Rng rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + rep % 3;
    const int i = 1 + rep % (n - 1);
    CotangentPoint p = random_point(n, rng);
    const double m = root_component(p.xi, i).modulus;
    if (m < 1e-6) continue;
    p.xi *= (profile.cutoff() + rng.uniform(0.0, 1.0)) / m;
    CHECK(points_equal(tau(p, i, profile), p, 1e-9));
    CHECK(points_equal(tau_inverse(p, i, profile), p, 1e-9));
  }
}

TEST_CASE("zero section of SU(2) maps to the antipode") {
  const TwistProfile profile(1.0);
  Rng rng(4);
  const CMat x = random_su(2, rng);
  const CotangentPoint p{x, CMat::Zero(2, 2)};
  const CotangentPoint q = tau(p, 1, profile);
  CHECK(q.xi.norm() == 0.0);
  CHECK((q.x - x * weyl_element(1, 2)).norm() <= 1e-15);
  CHECK_FALSE(points_equal(p, q, 1e-6));
  // the inverse branch returns
  CHECK(points_equal(tau_inverse(q, 1, profile), p, 1e-12));
}

TEST_CASE("round trips") {
  const TwistProfile profile(1.0);
  Rng rng(5);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + rep % 3;
    const int i = 1 + rep % (n - 1);
    const CotangentPoint p = random_point(n, rng);
    CHECK(points_equal(tau_inverse(tau(p, i, profile), i, profile), p, 1e-8));
  }
}

TEST_CASE("root component and moment map are preserved") {
  const TwistProfile profile(1.0);
  Rng rng(6);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + rep % 3;
    const int i = 1 + rep % (n - 1);
    const CotangentPoint p = random_point(n, rng);
    const CotangentPoint q = tau(p, i, profile);
    const auto before = root_component(p.xi, i);
    const auto after = root_component(q.xi, i);
    CHECK((after.part - before.part).norm() == 0.0);
    CHECK((moment(q) - moment(p)).norm() <= 1e-9);
    CHECK(herm_zero_diag_error(q.xi) <= 1e-13);
    CHECK(special_unitary_error(q.x) <= 1e-12);
  }
}

TEST_CASE("equivariance is exact") {
  const TwistProfile profile(1.0);
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 3;
    const int i = 1 + rep % (n - 1);
    const CotangentPoint p = random_point(n, rng);
    const CMat g = random_su(n, rng);
    const CotangentPoint a = tau(CotangentPoint{g * p.x, p.xi}, i, profile);
    const CotangentPoint b = tau(p, i, profile);
    CHECK((a.xi - b.xi).norm() == 0.0);
    CHECK((a.x - g * b.x).norm() <= 1e-12);
  }
}

TEST_CASE("branch continuity with the torus absorbing the phase") {
  const TwistProfile profile(1.0);
  Rng rng(8);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 3;
    const int i = 1 + rep % 2;
    CotangentPoint p = random_point(n, rng);
    p.xi(i - 1, i) = 0.0;
    p.xi(i, i - 1) = 0.0;
    const CotangentPoint base = tau(p, i, profile);
    CotangentPoint near = p;
    const Complex phase = std::exp(I * rng.angle());
    near.xi(i - 1, i) = 1e-8 * phase;
    near.xi(i, i - 1) = 1e-8 * std::conj(phase);
    CHECK(points_distance(tau(near, i, profile), base) <= 1e-6);
  }
}

TEST_CASE("twist is symplectic away from the branch locus") {
  const TwistProfile profile(1.0);
  Rng rng(9);
  for (int n : {2, 3}) {
    for (int i = 1; i <= n - 1; ++i) {
      for (int rep = 0; rep < 25; ++rep) {
        CotangentPoint p = random_point(n, rng);
        if (root_component(p.xi, i).modulus < kBranchGuard) continue;
        auto map = [&](const CotangentPoint& q) { return tau(q, i, profile); };
        CHECK(pullback_error(map, p, 1e-5) <= 1e-5);
      }
    }
  }
}

TEST_CASE("hamiltonian field identity") {
  const TwistProfile profile(1.0);
  Rng rng(10);
  int tested = 0;
  while (tested < 50) {
    const CotangentPoint p = random_point(3, rng);
    const int i = 1 + tested % 2;
    if (root_component(p.xi, i).modulus < kBranchGuard) continue;
    CHECK(hamiltonian_field_check(p, i, profile) <= 1e-5);
    ++tested;
  }
  // level-set directions: both sides vanish
  CotangentPoint p = random_point(3, rng);
  p.xi(0, 1) = 0.8;
  p.xi(1, 0) = 0.8;
  const TangentVector field = twist_field(p, 1, profile);
  TangentVector v{CMat::Zero(3, 3), CMat::Zero(3, 3)};
  v.eta(0, 1) = I * 0.3;  // orthogonal to the entry: |xi_12| unchanged
  v.eta(1, 0) = -I * 0.3;
  const double omega = symplectic_form(p, field, v);
  CHECK(std::abs(omega) <= 1e-10);

  // doubling the profile doubles both sides: compare against two cutoffs
  const double check1 = hamiltonian_field_check(p, 1, profile);
  CHECK(check1 <= 1e-5);
}

TEST_CASE("steinberg ladder decays with slope -1") {
  const TwistProfile profile(1.0);
  Rng rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 3;
    const int i = 1 + rep % 2;
    CMat seed = CMat::Zero(n, n);
    const Complex phase = std::exp(I * rng.angle());
    seed(i - 1, i) = 0.4 * phase;
    seed(i, i - 1) = 0.4 * std::conj(phase);
    CMat perp = random_herm_zero_diag(n, rng);
    perp(i - 1, i) = 0.0;
    perp(i, i - 1) = 0.0;
    perp *= 2.0 / perp.norm();
    const DecayLadder ladder = steinberg_decay(random_su(n, rng), seed, perp, i, profile);
    CHECK(ladder.slope == doctest::Approx(-1.0).epsilon(0.05));
    // the displacement norm is s-independent, so ratio * s is ~constant
    const double c0 = ladder.ratio.front() * ladder.s.front();
    const double c1 = ladder.ratio.back() * ladder.s.back();
    CHECK(std::abs(c1 / c0 - 1.0) <= 0.3);
  }
}

TEST_CASE("nilpotent moment is untouched on the empty-plane branch") {
  const TwistProfile profile(1.0);
  Rng rng(12);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3 + rep % 2;
    const int i = 1 + rep % (n - 1);
    CotangentPoint p = random_point(n, rng);
    p.xi(i - 1, i) = 0.0;
    p.xi(i, i - 1) = 0.0;
    const CotangentPoint q = tau(p, i, profile);
    CHECK((nilpotent_moment(q) - nilpotent_moment(p)).norm() <= 1e-13);
  }
}

TEST_CASE("saturated scaling gives an exactly zero ratio") {
  const TwistProfile profile(1.0);
  Rng rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 3;
    const int i = 1 + rep % 2;
    CotangentPoint p = random_point(n, rng);
    const double m = root_component(p.xi, i).modulus;
    if (m < 0.2) continue;
    const double s = 2.0 * profile.cutoff() / m;
    CHECK(steinberg_ratio_scaled(p, i, profile, s) == 0.0);
  }
}

TEST_CASE("twist is the time-1 map of its vector field") {
  // integrate dx/dt = x a(xi), dxi/dt = eta(xi) with (a, eta) = twist_field
  const TwistProfile profile(1.0);
  Rng rng(16);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 2;
    const int i = 1;
    CotangentPoint p = random_point(n, rng);
    if (root_component(p.xi, i).modulus < 0.2) continue;
    CMat x = p.x;
    CMat xi = p.xi;
    const int steps = 200;
    const double dt = 1.0 / steps;
    for (int k = 0; k < steps; ++k) {
      auto deriv = [&](const CMat& xc, const CMat& xic) {
        const TangentVector f = twist_field(CotangentPoint{xc, xic}, i, profile);
        return std::pair<CMat, CMat>(xc * f.a, f.eta);
      };
      const auto [k1x, k1s] = deriv(x, xi);
      const auto [k2x, k2s] = deriv(x + 0.5 * dt * k1x, xi + 0.5 * dt * k1s);
      const auto [k3x, k3s] = deriv(x + 0.5 * dt * k2x, xi + 0.5 * dt * k2s);
      const auto [k4x, k4s] = deriv(x + dt * k3x, xi + dt * k3s);
      x += (dt / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      xi += (dt / 6.0) * (k1s + 2.0 * k2s + 2.0 * k3s + k4s);
      x = unitarize(x);
      xi = zero_diag(hermitize(xi));
    }
    const CotangentPoint target = tau(p, i, profile);
    CHECK(points_distance(CotangentPoint{x, xi}, target) <= 1e-7);
  }
}

TEST_CASE("verify_twist aggregates the checks") {
  const TwistProfile profile(1.0);
  Rng rng(14);
  Rng grng(15);
  CotangentPoint p = random_point(3, rng);
  while (root_component(p.xi, 1).modulus < kBranchGuard) p = random_point(3, rng);
  const TwistReport report = verify_twist(p, 1, profile, grng);
  CHECK(report.equivariance <= 1e-10);
  CHECK(report.mu_preservation <= 1e-9);
  CHECK(report.symplectic <= 1e-5);
  CHECK(report.steinberg.slope == doctest::Approx(-1.0).epsilon(0.05));
}

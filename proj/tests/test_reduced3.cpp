#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/reduced3.hpp"
#include "flagtwist/springer.hpp"

using namespace flagtwist;

namespace {
const Complex I(0.0, 1.0);

CMat random_torus3(Rng& rng) {
  CMat t = CMat::Identity(3, 3);
  const double a = rng.angle(), b = rng.angle();
  t(0, 0) = std::exp(I * a);
  t(1, 1) = std::exp(I * b);
  t(2, 2) = std::exp(-I * (a + b));
  return t;
}
}  // namespace

TEST_CASE("project_chart on the vertex matrices") {
  const double N = 1.3;
  CMat q1 = CMat::Zero(3, 3);
  q1(0, 1) = N;
  q1(1, 0) = N;
  const ReducedChart3 c1 = project_chart(q1);
  CHECK(c1.m12 == doctest::Approx(N * N));
  CHECK(c1.m13 == 0.0);
  CHECK(c1.m23 == 0.0);
  CHECK(c1.nu == 0.0);
  CHECK(c1.scale == doctest::Approx(N));

  // edge Q1Q2 matrices land on {m23 = 0}
  const double a = 0.6, b = std::sqrt(1.0 - 0.36);
  CMat e = CMat::Zero(3, 3);
  e(0, 1) = N * a;
  e(1, 0) = N * a;
  e(0, 2) = N * b;
  e(2, 0) = N * b;
  const ReducedChart3 ce = project_chart(e);
  CHECK(ce.m12 == doctest::Approx(N * N * a * a));
  CHECK(ce.m13 == doctest::Approx(N * N * b * b));
  CHECK(ce.m23 == 0.0);
  CHECK(ce.nu == 0.0);
}

TEST_CASE("chart invariants and torus invariance") {
  Rng rng(1);
  const RVec p{{2.0, 0.0, -2.0}};
  for (int rep = 0; rep < 200; ++rep) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const ReducedChart3 c = project_chart(pt.xi);
    CHECK(c.constraint_sum_residual() <= 1e-9 * c.scale * c.scale);
    CHECK(c.constraint_product_residual() <= 1e-9 * std::pow(c.scale, 6));
    const CMat t = random_torus3(rng);
    const ReducedChart3 ct = project_chart(CMat(t.adjoint() * pt.xi * t));
    CHECK(ct.m12 == doctest::Approx(c.m12).epsilon(1e-12));
    CHECK(ct.m13 == doctest::Approx(c.m13).epsilon(1e-12));
    CHECK(ct.m23 == doctest::Approx(c.m23).epsilon(1e-12));
    CHECK(ct.nu == doctest::Approx(c.nu).epsilon(1e-10));
  }
  CHECK_THROWS(project_chart(CMat::Identity(3, 3)));
}

TEST_CASE("lift is a section of project") {
  Rng rng(2);
  const RVec p{{1.0, 0.0, -1.0}};
  for (int rep = 0; rep < 500; ++rep) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const ReducedChart3 c = project_chart(pt.xi);
    const CMat xi = lift_chart(c);
    const HermEigs eig = hermitian_eigs(xi);
    CHECK(std::abs(eig.values(0) - 1.0) <= 1e-9);
    CHECK(std::abs(eig.values(1)) <= 1e-9);
    const ReducedChart3 back = project_chart(xi);
    CHECK(back.m12 == doctest::Approx(c.m12).epsilon(1e-10));
    CHECK(back.m13 == doctest::Approx(c.m13).epsilon(1e-10));
    CHECK(back.m23 == doctest::Approx(c.m23).epsilon(1e-10));
    CHECK(std::abs(back.nu - c.nu) <= 1e-9);
    // sign bookkeeping of the sheet
    if (c.nu > 1e-6)
      CHECK((xi(0, 1) * xi(1, 2) * std::conj(xi(0, 2))).imag() > 0.0);
  }
  ReducedChart3 bad;
  bad.scale = 1.0;
  bad.m12 = 0.9;
  bad.m13 = 0.9;
  bad.m23 = 0.9;
  bad.nu = 0.0;
  CHECK_THROWS(lift_chart(bad));
}

TEST_CASE("vertices lift to the canonical matrices up to torus") {
  for (int j : {1, 2, 3}) {
    const double N = 2.0;
    const CMat xi = lift_chart(chart_vertex(j, N));
    const ReducedChart3 back = project_chart(xi);
    CHECK(nearest_vertex(back) == j);
  }
}

TEST_CASE("tau_reduced is well-defined and preserves the chart constraints") {
  Rng rng(3);
  const TwistProfile profile(1.0);
  const RVec p{{2.0, 0.0, -2.0}};
  for (int rep = 0; rep < 200; ++rep) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const ReducedChart3 c = project_chart(pt.xi);
    for (int i : {1, 2}) {
      const ReducedChart3 image = tau_reduced(c, i, profile);
      CHECK(image.constraint_sum_residual() <= 1e-9 * 16.0);
      CHECK(image.constraint_product_residual() <= 1e-9 * std::pow(2.0, 6));
      // independence of the lift: apply the twist upstairs instead
      const ReducedChart3 direct = project_chart(tau(pt, i, profile).xi);
      CHECK(std::abs(image.m12 - direct.m12) <= 1e-9);
      CHECK(std::abs(image.m13 - direct.m13) <= 1e-9);
      CHECK(std::abs(image.m23 - direct.m23) <= 1e-9);
      CHECK(std::abs(image.nu - direct.nu) <= 1e-8);
      // the acted root plane keeps its squared modulus
      if (i == 1) CHECK(std::abs(image.m12 - c.m12) <= 1e-9);
      if (i == 2) CHECK(std::abs(image.m23 - c.m23) <= 1e-9);
      // bijection via the inverse profile
      const ReducedChart3 back = tau_reduced(image, i, profile, true);
      CHECK(std::abs(back.m12 - c.m12) <= 1e-8);
      CHECK(std::abs(back.m13 - c.m13) <= 1e-8);
      CHECK(std::abs(back.m23 - c.m23) <= 1e-8);
      CHECK(std::abs(back.nu - c.nu) <= 1e-8);
    }
  }
}

TEST_CASE("edge image formula along Q1Q2") {
  const TwistProfile profile(1.0);
  const double N = 4.0;
  Rng rng(4);
  for (int rep = 0; rep < 100; ++rep) {
    const double a = rng.uniform(0.01, 0.99);
    const double b = std::sqrt(1.0 - a * a);
    const ReducedChart3 image = tau_reduced(edge_point(12, a, N), 1, profile);
    const double h = profile.h(N * a);
    CHECK(image.m12 == doctest::Approx(N * N * a * a).epsilon(1e-10));
    CHECK(image.m13 ==
          doctest::Approx(N * N * b * b * std::cos(h) * std::cos(h)).epsilon(1e-9));
    CHECK(image.m23 ==
          doctest::Approx(N * N * b * b * std::sin(h) * std::sin(h)).epsilon(1e-9));
  }
}

TEST_CASE("vertex permutations realize the simple transpositions") {
  const TwistProfile profile(1.0);
  const double N = 4.0;
  const auto perm1 = vertex_permutation(1, N, profile);
  const auto perm2 = vertex_permutation(2, N, profile);
  CHECK(perm1 == std::array<int, 3>{1, 3, 2});
  CHECK(perm2 == std::array<int, 3>{2, 1, 3});
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    std::array<int, 3> out{};
    for (int j = 0; j < 3; ++j) out[j] = f[g[j] - 1];
    return out;
  };
  CHECK(compose(perm1, compose(perm2, perm1)) == compose(perm2, compose(perm1, perm2)));
  CHECK_THROWS(vertex_permutation(1, 0.5, profile));
}

TEST_CASE("figure-1 edge traces") {
  const TwistProfile profile(1.0);
  const double N = 4.0;
  const int samples = 256;
  SUBCASE("edge 23 is reversed by the first generator") {
    const EdgeTrace trace = trace_edge_image(1, 23, samples, N, profile);
    CHECK(trace.reversed);
  }
  SUBCASE("edge 12 avoids the other edge interiors and saturates on itself") {
    const EdgeTrace trace = trace_edge_image(1, 12, samples, N, profile);
    CHECK(trace.interior_hits[1] == 0);  // edge 23
    CHECK(trace.interior_hits[2] == 0);  // edge 31
    REQUIRE(trace.on_own_edge.size() == 1);
    // endpoint a = 1 is fixed (h(N) = pi), so the interval reaches 1
    CHECK(trace.on_own_edge[0].hi == doctest::Approx(1.0));
    // the interval starts where h(N a) reaches pi - 1e-3
    double a_expected = 1.0;
    for (int k = 0; k <= 100000; ++k) {
      const double a = static_cast<double>(k) / 100000;
      if (profile.h(N * a) >= 3.141592653589793 - 1e-3) {
        a_expected = a;
        break;
      }
    }
    CHECK(std::abs(trace.on_own_edge[0].lo - a_expected) <= 1.0 / samples);
  }
  SUBCASE("fixed endpoint of edge 12") {
    const ReducedChart3 image = tau_reduced(edge_point(12, 1.0, N), 1, profile);
    CHECK(nearest_vertex(image) == 1);
  }
}

TEST_CASE("subregular cross-check between chart strata and Jordan types") {
  Rng rng(5);
  const double N = 1.0;
  for (int rep = 0; rep < 200; ++rep) {
    const double a = rng.uniform(0.05, 0.95);
    for (int edge : {12, 23, 31}) {
      const CMat xi = lift_chart(edge_point(edge, a, N));
      const HermEigs eig = hermitian_eigs(xi);
      const CotangentPoint pt{CMat(eig.vectors.adjoint()), xi};
      const SpringerClass cls = springer_class(pt);
      if (edge == 31)
        CHECK(cls == SpringerClass::Regular);
      else
        CHECK(cls == SpringerClass::Subregular);
    }
  }
}

TEST_CASE("scale equivariance with a rescaled cutoff") {
  Rng rng(6);
  const RVec p{{1.0, 0.0, -1.0}};
  for (int rep = 0; rep < 100; ++rep) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const ReducedChart3 c = project_chart(pt.xi);
    const double s = rng.uniform(0.5, 2.0);
    const ReducedChart3 cs = project_chart(CMat(s * pt.xi));
    CHECK(cs.m12 == doctest::Approx(s * s * c.m12).epsilon(1e-10));
    CHECK(cs.nu == doctest::Approx(s * s * s * c.nu).epsilon(1e-8));
    for (int i : {1, 2}) {
      const ReducedChart3 a = tau_reduced(cs, i, TwistProfile(s));
      const ReducedChart3 b = tau_reduced(c, i, TwistProfile(1.0));
      CHECK(std::abs(a.m12 - s * s * b.m12) <= 1e-8);
      CHECK(std::abs(a.m13 - s * s * b.m13) <= 1e-8);
      CHECK(std::abs(a.m23 - s * s * b.m23) <= 1e-8);
      CHECK(std::abs(a.nu - s * s * s * b.nu) <= 1e-8);
    }
  }
}

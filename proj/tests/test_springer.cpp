#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "flagtwist/springer.hpp"

using namespace flagtwist;

namespace {
CMat jordan_block(int n) {
  CMat j = CMat::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) j(k, k + 1) = 1.0;
  return j;
}
}  // namespace

TEST_CASE("jordan partition of canonical forms") {
  for (int n : {2, 3, 4, 5}) {
    CHECK(jordan_partition(jordan_block(n)).parts == std::vector<int>{n});
    CHECK(jordan_partition(CMat::Zero(n, n)).parts == std::vector<int>(n, 1));
  }
  // N * e_12 in sl_3 has type (2,1)
  CMat u = CMat::Zero(3, 3);
  u(0, 1) = 0.8;
  CHECK(jordan_partition(u).parts == std::vector<int>{2, 1});
  CHECK(classify_partition(jordan_partition(u), 3) == SpringerClass::Subregular);

  // direct sum of blocks
  CMat mixed = CMat::Zero(5, 5);
  mixed.topLeftCorner(3, 3) = jordan_block(3);
  mixed.block(3, 3, 2, 2) = jordan_block(2);
  CHECK(jordan_partition(mixed).parts == std::vector<int>{3, 2});
}

TEST_CASE("jordan partition rejects non-nilpotent input") {
  CMat m = CMat::Identity(3, 3);
  CHECK_THROWS(jordan_partition(m));
}

TEST_CASE("jordan partition is conjugation invariant") {
  Rng rng(1);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 3 + rep % 3;
    CMat u = CMat::Zero(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c)
        if (rng.uniform() < 0.7) u(r, c) = rng.complex_normal();
    const CMat g = random_su(n, rng);
    CHECK(jordan_partition(u) == jordan_partition(adjoint_action(g, u)));
  }
}

TEST_CASE("springer class over the SU(3) fiber") {
  Rng rng(2);
  const RVec p3{{1.0, 0.0, -1.0}};
  int regular = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const CotangentPoint pt = sample_fiber(p3, rng);
    const double m12 = std::norm(pt.xi(0, 1));
    const double m23 = std::norm(pt.xi(1, 2));
    const SpringerClass cls = springer_class(pt);
    if (m12 * m23 > 1e-10) {
      CHECK(cls == SpringerClass::Regular);
      ++regular;
    }
  }
  CHECK(regular > 400);  // the boundary is measure zero

  // edge representatives: m23 = 0 and m12 = 0 are subregular, m13 = 0 is not
  auto edge_class = [](double a, int which) {
    const double b = std::sqrt(1.0 - a * a);
    CMat xi = CMat::Zero(3, 3);
    if (which == 12) {
      xi(0, 1) = a;
      xi(0, 2) = b;
    } else if (which == 23) {
      xi(0, 2) = a;
      xi(1, 2) = b;
    } else {
      xi(0, 1) = a;
      xi(1, 2) = b;
    }
    xi = xi + CMat(xi.adjoint().eval());
    HermEigs eig = hermitian_eigs(xi);
    return springer_class(CotangentPoint{CMat(eig.vectors.adjoint()), xi});
  };
  for (double a : {0.2, 0.5, 0.8}) {
    CHECK(edge_class(a, 12) == SpringerClass::Subregular);
    CHECK(edge_class(a, 23) == SpringerClass::Subregular);
    CHECK(edge_class(a, 31) == SpringerClass::Regular);
  }
}

TEST_CASE("fiber normal form residuals") {
  Rng rng(3);
  for (int n : {3, 4, 5}) {
    RVec pivot = RVec::Zero(n);
    pivot(0) = 1.0;
    pivot(1) = -1.0;
    for (int rep = 0; rep < 300; ++rep) {
      const CotangentPoint pt = sample_fiber(pivot, rng);
      const FiberNormalForm f = fiber_normal_form(pt);
      CHECK(f.epsilon >= 0.0);
      CHECK(f.epsilon <= 1.0);
      const NormalFormResiduals r = normal_form_residuals(f);
      CHECK(r.pair_mismatch <= 1e-8);
      CHECK(r.magnitude_mismatch <= 1e-8);
      CHECK(r.tail <= 1e-8);
    }
  }
}

TEST_CASE("reconstructed bordered matrix has the pivot spectrum") {
  // (epsilon, a) must assemble to a matrix with spectrum {1, -1, 0, ...}
  Rng rng(31);
  for (int n : {3, 4, 5}) {
    RVec pivot = RVec::Zero(n);
    pivot(0) = 1.0;
    pivot(1) = -1.0;
    for (int rep = 0; rep < 50; ++rep) {
      const CotangentPoint pt = sample_fiber(pivot, rng);
      const FiberNormalForm f = fiber_normal_form(pt);
      CMat z = CMat::Zero(n, n);
      z(0, 0) = f.epsilon;
      z(1, 1) = -f.epsilon;
      for (int j = 0; j + 1 < n; ++j) {
        z(j, n - 1) = f.a(j);
        z(n - 1, j) = std::conj(f.a(j));
      }
      const HermEigs eig = hermitian_eigs(z);
      CHECK(std::abs(eig.values(0) - 1.0) <= 1e-8);
      CHECK(std::abs(eig.values(n - 1) + 1.0) <= 1e-8);
      for (int j = 1; j + 1 < n; ++j) CHECK(std::abs(eig.values(j)) <= 1e-8);
    }
  }
}

TEST_CASE("fiber normal form degenerate cases") {
  // frame sending xi to diag(1, -1, 0): eigenvectors ordered (1, -1, 0)
  auto pivot_frame = [](const CMat& xi) {
    HermEigs eig = hermitian_eigs(xi);
    CMat y(3, 3);
    y.col(0) = eig.vectors.col(0);  // eigenvalue 1
    y.col(1) = eig.vectors.col(2);  // eigenvalue -1
    y.col(2) = eig.vectors.col(1);  // eigenvalue 0
    return CMat(y.adjoint());
  };

  // block-diagonal xi with empty last row/column: epsilon = 1, a = 0
  CMat xi = CMat::Zero(3, 3);
  xi(0, 1) = 1.0;
  xi(1, 0) = 1.0;
  const CotangentPoint p{pivot_frame(xi), xi};
  const FiberNormalForm f = fiber_normal_form(p);
  CHECK(f.epsilon == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.a.norm() <= 1e-12);

  // leading block zero: epsilon = 0 and the border has unit length
  CMat xi0 = CMat::Zero(3, 3);
  xi0(0, 2) = std::sqrt(0.5);
  xi0(2, 0) = std::sqrt(0.5);
  xi0(1, 2) = Complex(0, std::sqrt(0.5));
  xi0(2, 1) = Complex(0, -std::sqrt(0.5));
  const CotangentPoint p0{pivot_frame(xi0), xi0};
  const FiberNormalForm f0 = fiber_normal_form(p0);
  CHECK(f0.epsilon <= 1e-12);
  CHECK(std::abs(f0.a.norm() - 1.0) <= 1e-12);

  // off-fiber points are rejected
  Rng rng(5);
  CHECK_THROWS(fiber_normal_form(random_point(3, rng)));
}

TEST_CASE("hook census stays within hook types") {
  Rng rng(4);
  SUBCASE("su(3) pivot fiber") {
    const HookCensus census = hook_census(RVec{{1.0, -1.0, 0.0}}, 200, rng);
    for (const auto& [part, count] : census.counts) {
      CHECK(count > 0);
      const bool allowed = part.parts == std::vector<int>{3} ||
                           part.parts == std::vector<int>{2, 1};
      CHECK(allowed);
    }
  }
  SUBCASE("su(4) pivot fiber") {
    const HookCensus census = hook_census(RVec{{1.0, -1.0, 0.0, 0.0}}, 200, rng);
    for (const auto& [part, count] : census.counts) {
      CHECK(count > 0);
      const bool allowed = part.parts == std::vector<int>{4} ||
                           part.parts == std::vector<int>{3, 1} ||
                           part.parts == std::vector<int>{2, 1, 1};
      CHECK(allowed);
    }
  }
  SUBCASE("su(5) pivot fiber") {
    const HookCensus census = hook_census(RVec{{1.0, -1.0, 0.0, 0.0, 0.0}}, 60, rng);
    for (const auto& [part, count] : census.counts) {
      CHECK(count > 0);
      const bool hook = part.parts[0] > 1 &&
                        std::all_of(part.parts.begin() + 1, part.parts.end(),
                                    [](int v) { return v == 1; });
      CHECK(hook);
    }
  }
  SUBCASE("zero fiber") {
    const HookCensus census = hook_census(RVec::Zero(3), 10, rng);
    CHECK(census.counts.size() == 1);
    CHECK(census.counts.begin()->first.parts == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("partition formatting") {
  Partition p{{3, 1}};
  CHECK(p.str() == "3+1");
  CHECK(p.weight() == 4);
}

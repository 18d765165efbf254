#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagtwist/phase_space.hpp"

using namespace flagtwist;

namespace {
const Complex I(0.0, 1.0);

CMat random_torus(int n, Rng& rng) {
  CMat t = CMat::Identity(n, n);
  double sum = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double th = rng.angle();
    t(k, k) = std::exp(I * th);
    sum += th;
  }
  t(n - 1, n - 1) = std::exp(-I * sum);
  return t;
}
}  // namespace

TEST_CASE("points_equal respects the torus relation") {
  Rng rng(1);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + rep % 3;
    const CotangentPoint p = random_point(n, rng);
    const CMat t = random_torus(n, rng);
    const CotangentPoint q{p.x * t, t.adjoint() * p.xi * t};
    CHECK(points_equal(p, q, 1e-10));
    CHECK(points_equal(q, p, 1e-10));
    CHECK(points_equal(p, p, 1e-12));
  }
}

TEST_CASE("points_equal rejects a Weyl translate") {
  Rng rng(2);
  const CotangentPoint p = random_point(3, rng);
  const CotangentPoint q{p.x * weyl_element(1, 3), p.xi};
  CHECK_FALSE(points_equal(p, q, 1e-6));
}

TEST_CASE("symplectic form on coordinate vectors") {
  const int n = 3;
  CMat a = CMat::Zero(n, n), eta = CMat::Zero(n, n);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  eta(0, 1) = I;
  eta(1, 0) = -I;
  const CotangentPoint p{CMat::Identity(n, n), CMat::Zero(n, n)};
  const TangentVector v1{a, CMat::Zero(n, n)};
  const TangentVector v2{CMat::Zero(n, n), eta};
  CHECK(symplectic_form(p, v1, v2) == doctest::Approx(2.0));
  CHECK(symplectic_form(p, v2, v1) == doctest::Approx(-2.0));
  // zero section is Lagrangian for base-only vectors
  const TangentVector w{a, CMat::Zero(n, n)};
  CHECK(symplectic_form(p, v1, w) == doctest::Approx(0.0));
}

TEST_CASE("form is antisymmetric and nondegenerate at random points") {
  Rng rng(3);
  for (int n : {2, 3}) {
    const auto basis = tangent_basis(n);
    CHECK(static_cast<int>(basis.size()) == 2 * (n * n - n));
    for (int rep = 0; rep < 200; ++rep) {
      const CotangentPoint p = random_point(n, rng);
      RMat gram(basis.size(), basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          gram(i, j) = symplectic_form(p, basis[i], basis[j]);
      CHECK((gram + gram.transpose()).norm() <= 1e-10);
      Eigen::JacobiSVD<RMat> svd(gram);
      const auto& sv = svd.singularValues();
      CHECK(sv(sv.size() - 1) > 1e-8 * sv(0));
    }
  }
}

TEST_CASE("form is invariant under representative transport") {
  Rng rng(4);
  const int n = 3;
  const auto basis = tangent_basis(n);
  for (int rep = 0; rep < 50; ++rep) {
    const CotangentPoint p = random_point(n, rng);
    const CMat t = random_torus(n, rng);
    const CotangentPoint q{p.x * t, t.adjoint() * p.xi * t};
    for (int k = 0; k < 10; ++k) {
      const auto& va = basis[(3 * k) % basis.size()];
      const auto& vb = basis[(5 * k + 1) % basis.size()];
      const double before = symplectic_form(p, va, vb);
      const double after =
          symplectic_form(q, transport_torus(va, t), transport_torus(vb, t));
      CHECK(std::abs(after - before) <= 1e-10);
    }
  }
}

TEST_CASE("pullback error: identity, left action, scaling") {
  Rng rng(5);
  const CotangentPoint p = random_point(3, rng);
  auto identity = [](const CotangentPoint& q) { return q; };
  CHECK(pullback_error(identity, p) <= 1e-12);

  const CMat g = random_su(3, rng);
  auto left = [&](const CotangentPoint& q) { return CotangentPoint{g * q.x, q.xi}; };
  CHECK(pullback_error(left, p, 1e-5) <= 1e-6);

  auto doubling = [](const CotangentPoint& q) { return CotangentPoint{q.x, 2.0 * q.xi}; };
  CHECK(pullback_error(doubling, p, 1e-5) >= 0.5);
}

TEST_CASE("json round trip") {
  Rng rng(6);
  const CotangentPoint p = random_point(3, rng);
  nlohmann::json j;
  to_json(j, p);
  CHECK(j.at("n") == 3);
  CotangentPoint q;
  from_json(j, q);
  CHECK((p.x - q.x).norm() == 0.0);
  CHECK((p.xi - q.xi).norm() == 0.0);

  TangentVector v{random_skew_zero_diag(3, rng), random_herm_zero_diag(3, rng)};
  nlohmann::json jv;
  to_json(jv, v);
  TangentVector w;
  from_json(jv, w);
  CHECK((v.a - w.a).norm() == 0.0);
  CHECK((v.eta - w.eta).norm() == 0.0);
}

TEST_CASE("validate rejects malformed points") {
  Rng rng(7);
  CotangentPoint p = random_point(3, rng);
  CHECK_NOTHROW(p.validate());
  CotangentPoint bad = p;
  bad.xi(0, 0) = 1.0;
  CHECK_THROWS(bad.validate());
  CotangentPoint bad2 = p;
  bad2.x *= 1.5;
  CHECK_THROWS(bad2.validate());
}

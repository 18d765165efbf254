#include "flagtwist/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace flagtwist {

namespace {
const Complex kI(0.0, 1.0);

// Best diagonal-phase alignment t with q.x * t ~ ref.x.
CMat torus_alignment(const CotangentPoint& q, const CotangentPoint& ref) {
  const int n = q.dim();
  CMat d = q.x.adjoint() * ref.x;
  CMat t = CMat::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    const Complex z = d(k, k);
    const double mag = std::abs(z);
    t(k, k) = mag > 0.0 ? z / mag : Complex(1.0);
  }
  return t;
}
}  // namespace

void CotangentPoint::validate(double tol) const {
  if (x.rows() != x.cols() || xi.rows() != xi.cols() || x.rows() != xi.rows())
    throw std::invalid_argument("cotangent point: shape mismatch");
  if (special_unitary_error(x) > tol)
    throw std::invalid_argument("cotangent point: x not special unitary");
  if (herm_zero_diag_error(xi) > tol)
    throw std::invalid_argument("cotangent point: xi not in t_perp");
}

CotangentPoint random_point(int n, Rng& rng, double xi_scale) {
  CotangentPoint p;
  p.x = random_su(n, rng);
  p.xi = xi_scale * random_herm_zero_diag(n, rng);
  return p;
}

double points_distance(const CotangentPoint& p, const CotangentPoint& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("points: dimension mismatch");
  const int n = p.dim();
  const CMat d = p.x.adjoint() * q.x;
  double offdiag = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) offdiag = std::max(offdiag, std::abs(d(r, c)));
  CMat t = CMat::Identity(n, n);
  for (int k = 0; k < n; ++k) {
    const Complex z = d(k, k);
    const double mag = std::abs(z);
    t(k, k) = mag > 0.0 ? z / mag : Complex(1.0);
  }
  const double xi_err = (t.adjoint() * p.xi * t - q.xi).norm();
  return std::max(offdiag, xi_err);
}

bool points_equal(const CotangentPoint& p, const CotangentPoint& q, double tol) {
  return points_distance(p, q) <= tol;
}

CotangentPoint align_to(const CotangentPoint& q, const CotangentPoint& ref) {
  const CMat t = torus_alignment(q, ref);
  return {q.x * t, t.adjoint() * q.xi * t};
}

TangentVector transport_torus(const TangentVector& v, const CMat& t) {
  return {t.adjoint() * v.a * t, t.adjoint() * v.eta * t};
}

double symplectic_form(const CotangentPoint& p, const TangentVector& v1,
                       const TangentVector& v2) {
  return pairing(v2.eta, v1.a) - pairing(v1.eta, v2.a) +
         pairing(p.xi, commutator(v1.a, v2.a));
}

std::vector<TangentVector> tangent_basis(int n) {
  std::vector<TangentVector> basis;
  basis.reserve(2 * (n * n - n));
  const CMat zero = CMat::Zero(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      CMat a_re = zero;
      a_re(r, c) = 1.0;
      a_re(c, r) = -1.0;
      basis.push_back({a_re, zero});
      CMat a_im = zero;
      a_im(r, c) = kI;
      a_im(c, r) = kI;
      basis.push_back({a_im, zero});
      CMat e_re = zero;
      e_re(r, c) = 1.0;
      e_re(c, r) = 1.0;
      basis.push_back({zero, e_re});
      CMat e_im = zero;
      e_im(r, c) = kI;
      e_im(c, r) = -kI;
      basis.push_back({zero, e_im});
    }
  }
  return basis;
}

TangentVector pushforward(const PointMap& map, const CotangentPoint& p,
                          const TangentVector& v, double step) {
  if (step <= 0.0) throw std::invalid_argument("pushforward: step > 0 required");
  auto probe = [&](double t) {
    CotangentPoint c{unitarize(p.x * exp_skew(t * v.a)), p.xi + t * v.eta};
    return map(c);
  };
  const CotangentPoint q0 = map(p);
  const CotangentPoint qp = align_to(probe(step), q0);
  const CotangentPoint qm = align_to(probe(-step), q0);

  const CMat vel = (q0.x.adjoint() * (qp.x - qm.x)) / (2.0 * step);
  const CMat a_full = skew_part(vel);
  const CMat delta = diag_part(a_full);  // torus drift of the representatives
  const CMat a = a_full - delta;
  CMat eta = hermitize((qp.xi - qm.xi) / (2.0 * step));
  eta += commutator(delta, q0.xi);
  eta = zero_diag(eta);
  return {a, eta};
}

double pullback_error(const PointMap& map, const CotangentPoint& p, double step) {
  const int n = p.dim();
  const auto basis = tangent_basis(n);
  const CotangentPoint q0 = map(p);
  // Reference vectors go through the same probe machinery with the identity
  // map so that the parametrization bias of the differences cancels.
  const PointMap identity = [](const CotangentPoint& q) { return q; };
  std::vector<TangentVector> ref, pushed;
  ref.reserve(basis.size());
  pushed.reserve(basis.size());
  for (const auto& v : basis) {
    ref.push_back(pushforward(identity, p, v, step));
    pushed.push_back(pushforward(map, p, v, step));
  }
  double err = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const double before = symplectic_form(p, ref[i], ref[j]);
      const double after = symplectic_form(q0, pushed[i], pushed[j]);
      err = std::max(err, std::abs(after - before));
    }
  }
  return err;
}

nlohmann::json cmat_to_json(const CMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      rows.push_back({m(r, c).real(), m(r, c).imag()});
  return rows;
}

CMat cmat_from_json(const nlohmann::json& j, int n) {
  if (static_cast<int>(j.size()) != n * n)
    throw std::invalid_argument("matrix json: wrong length");
  CMat m(n, n);
  int k = 0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      m(r, c) = Complex(j[k][0].get<double>(), j[k][1].get<double>());
      ++k;
    }
  return m;
}

void to_json(nlohmann::json& j, const CotangentPoint& p) {
  j = nlohmann::json{{"n", p.dim()}, {"x", cmat_to_json(p.x)}, {"xi", cmat_to_json(p.xi)}};
}

void from_json(const nlohmann::json& j, CotangentPoint& p) {
  const int n = j.at("n").get<int>();
  p.x = cmat_from_json(j.at("x"), n);
  p.xi = cmat_from_json(j.at("xi"), n);
}

void to_json(nlohmann::json& j, const TangentVector& v) {
  j = nlohmann::json{{"n", static_cast<int>(v.a.rows())},
                     {"a", cmat_to_json(v.a)},
                     {"eta", cmat_to_json(v.eta)}};
}

void from_json(const nlohmann::json& j, TangentVector& v) {
  const int n = j.at("n").get<int>();
  v.a = cmat_from_json(j.at("a"), n);
  v.eta = cmat_from_json(j.at("eta"), n);
}

}  // namespace flagtwist

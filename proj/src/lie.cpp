#include "flagtwist/lie.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace flagtwist {

namespace {
const Complex kI(0.0, 1.0);

void require_square(const CMat& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("square matrix expected");
}

void require_index(int i, int n) {
  if (i < 1 || i > n - 1) throw std::out_of_range("root plane index out of range");
}
}  // namespace

double unitary_error(const CMat& x) {
  require_square(x);
  const auto n = x.rows();
  return (x.adjoint() * x - CMat::Identity(n, n)).norm();
}

double special_unitary_error(const CMat& x) {
  return std::max(unitary_error(x), std::abs(x.determinant() - Complex(1.0)));
}

double herm_traceless_error(const CMat& xi) {
  require_square(xi);
  return std::max((xi - xi.adjoint()).norm(), std::abs(xi.trace()));
}

double skew_traceless_error(const CMat& a) {
  require_square(a);
  return std::max((a + a.adjoint()).norm(), std::abs(a.trace()));
}

double herm_zero_diag_error(const CMat& xi) {
  return std::max((xi - xi.adjoint()).norm(), xi.diagonal().norm());
}

double skew_zero_diag_error(const CMat& a) {
  return std::max((a + a.adjoint()).norm(), a.diagonal().norm());
}

double strict_upper_error(const CMat& u) {
  require_square(u);
  double err = 0.0;
  for (Eigen::Index r = 0; r < u.rows(); ++r)
    for (Eigen::Index c = 0; c <= r; ++c) err = std::max(err, std::abs(u(r, c)));
  return err;
}

bool is_special_unitary(const CMat& x, double tol) {
  return special_unitary_error(x) <= tol;
}

bool is_herm_zero_diag(const CMat& xi, double tol) {
  return herm_zero_diag_error(xi) <= tol;
}

CMat hermitize(const CMat& m) { return 0.5 * (m + m.adjoint()); }

CMat skew_part(const CMat& m) { return 0.5 * (m - m.adjoint()); }

CMat zero_diag(CMat m) {
  m.diagonal().setZero();
  return m;
}

CMat diag_part(const CMat& m) {
  CMat d = CMat::Zero(m.rows(), m.cols());
  d.diagonal() = m.diagonal();
  return d;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

double pairing(const CMat& xi, const CMat& a) {
  if (xi.rows() != a.rows() || xi.cols() != a.cols())
    throw std::invalid_argument("pairing: dimension mismatch");
  return (xi * (kI * a)).trace().real();
}

CMat adjoint_action(const CMat& g, const CMat& m) { return g * m * g.adjoint(); }

HermEigs hermitian_eigs(const CMat& h) {
  require_square(h);
  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian eigendecomposition failed");
  const auto n = h.rows();
  HermEigs out;
  out.values = RVec(n);
  out.vectors = CMat(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  // Phase normal form: first component of largest modulus made real positive.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index lead = 0;
    double best = 0.0;
    for (Eigen::Index r = 0; r < n; ++r) {
      const double mag = std::abs(out.vectors(r, k));
      if (mag > best) {
        best = mag;
        lead = r;
      }
    }
    if (best > 0.0) {
      Complex phase = std::conj(out.vectors(lead, k)) / best;
      out.vectors.col(k) *= phase;
    }
  }
  return out;
}

CMat exp_skew(const CMat& a) {
  require_square(a);
  const CMat h = kI * a;  // Hermitian
  HermEigs eig = hermitian_eigs(h);
  const auto n = a.rows();
  CVec phases(n);
  for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::exp(-kI * eig.values(k));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

CMat unitarize(const CMat& x) {
  require_square(x);
  Eigen::HouseholderQR<CMat> qr(x);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  const auto n = x.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex d = r(k, k);
    double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

CMat random_su(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_su: n >= 1 required");
  CMat g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = rng.complex_normal();
  CMat q = unitarize(g);
  const Complex det = q.determinant();
  q *= std::exp(-kI * (std::arg(det) / n));
  return q;
}

CMat random_herm_zero_diag(int n, Rng& rng) {
  CMat xi = CMat::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      Complex z = rng.complex_normal();
      xi(r, c) = z;
      xi(c, r) = std::conj(z);
    }
  return xi;
}

CMat random_skew_zero_diag(int n, Rng& rng) {
  CMat a = CMat::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      Complex z = rng.complex_normal();
      a(r, c) = z;
      a(c, r) = -std::conj(z);
    }
  return a;
}

CMat random_skew_traceless(int n, Rng& rng) {
  CMat a = random_skew_zero_diag(n, rng);
  double sum = 0.0;
  for (int k = 0; k < n - 1; ++k) {
    double t = rng.normal();
    a(k, k) = Complex(0.0, t);
    sum += t;
  }
  a(n - 1, n - 1) = Complex(0.0, -sum);
  return a;
}

CMat strict_upper(const CMat& xi) {
  require_square(xi);
  CMat u = CMat::Zero(xi.rows(), xi.cols());
  for (Eigen::Index r = 0; r < xi.rows(); ++r)
    for (Eigen::Index c = r + 1; c < xi.cols(); ++c) u(r, c) = xi(r, c);
  return u;
}

RootComponent root_component(const CMat& xi, int i) {
  require_square(xi);
  const int n = static_cast<int>(xi.rows());
  require_index(i, n);
  RootComponent out;
  out.part = CMat::Zero(n, n);
  out.part(i - 1, i) = xi(i - 1, i);
  out.part(i, i - 1) = xi(i, i - 1);
  out.modulus = std::abs(xi(i - 1, i));
  return out;
}

CMat weyl_element(int i, int n) {
  require_index(i, n);
  CMat w = CMat::Identity(n, n);
  w(i - 1, i - 1) = 0.0;
  w(i, i) = 0.0;
  w(i - 1, i) = kI;
  w(i, i - 1) = kI;
  return w;
}

CMat root_plane_rotation(int i, int n, Complex unit_entry, double theta) {
  require_index(i, n);
  CMat e = CMat::Identity(n, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  e(i - 1, i - 1) = c;
  e(i, i) = c;
  e(i - 1, i) = kI * s * unit_entry;
  e(i, i - 1) = kI * s * std::conj(unit_entry);
  return e;
}

}  // namespace flagtwist

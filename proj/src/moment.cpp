#include "flagtwist/moment.hpp"

#include <cmath>
#include <stdexcept>

namespace flagtwist {

namespace {
const Complex kI(0.0, 1.0);

// Unitary with first column v (|v| = 1): phase-rotated Householder.
CMat complete_to_unitary(const CVec& v) {
  const auto n = v.size();
  CVec vt = v;
  Complex lead_phase(1.0);
  if (std::abs(v(0)) > 0.0) {
    lead_phase = v(0) / std::abs(v(0));
    vt = v / lead_phase;  // first entry real >= 0
  }
  CVec u = vt;
  u(0) -= 1.0;
  const double uu = u.squaredNorm();
  CMat h = CMat::Identity(n, n);
  if (uu > 1e-30) h -= (2.0 / uu) * (u * u.adjoint());
  // h maps e1 to vt; restore the phase on the first column only via a
  // right diagonal factor (keeps unitarity).
  CMat d = CMat::Identity(n, n);
  d(0, 0) = lead_phase;
  return h * d;
}

CVec random_unit(Eigen::Index n, Rng& rng) {
  CVec w(n);
  for (Eigen::Index k = 0; k < n; ++k) w(k) = rng.complex_normal();
  w.normalize();
  return w;
}

// Unit vector with v* A v = 0 and a law of full support on that variety.
// Interpolates a positive-form direction w against a negative-form direction
// z as (sqrt(-fz) w + sqrt(fw) z) / sqrt(fw - fz) after a phase on z kills
// the cross term.  With w, z the extreme eigenvectors this reduces to the
// leading/trailing eigenvector mix, but eigenvector pairs alone leave their
// complement isotropic for symmetric spectra and pin the sample to one
// stratum of the fiber.
CVec isotropic_unit(const CMat& A, Rng& rng) {
  const auto n = A.rows();
  const double scale = A.norm();
  auto form = [&](const CVec& u) { return (u.adjoint() * A * u)(0).real(); };
  CVec w;
  double fw = 0.0;
  for (int attempt = 0;; ++attempt) {
    w = random_unit(n, rng);
    fw = form(w);
    if (fw > 1e-3 * scale) break;
    if (attempt > 512) throw std::runtime_error("isotropic_unit: no positive direction");
  }
  CVec z;
  double fz = 0.0;
  for (int attempt = 0;; ++attempt) {
    z = random_unit(n, rng);
    z -= (w.adjoint() * z)(0) * w;
    const double mag = z.norm();
    if (mag > 1e-6) {
      z /= mag;
      fz = form(z);
      if (fz < -1e-3 * scale) break;
    }
    if (attempt > 512) throw std::runtime_error("isotropic_unit: no negative direction");
  }
  const Complex cross = (w.adjoint() * A * z)(0);
  if (std::abs(cross) > 0.0) z *= kI * std::conj(cross) / std::abs(cross);
  CVec v = (std::sqrt(-fz) * w + std::sqrt(fw) * z) / std::sqrt(fw - fz);
  v.normalize();
  return v;
}

// Recursive step: unitary V with (V* A V) of zero diagonal, A Hermitian
// traceless.
CMat zero_diag_frame(const CMat& A, Rng& rng) {
  const auto n = A.rows();
  if (n == 1) return CMat::Identity(1, 1);
  if (A.norm() < 1e-13) return CMat::Identity(n, n);
  const CVec v = isotropic_unit(A, rng);
  CMat V = complete_to_unitary(v);
  CMat B = V.adjoint() * A * V;
  CMat W = CMat::Identity(n, n);
  W.bottomRightCorner(n - 1, n - 1) =
      zero_diag_frame(hermitize(B.bottomRightCorner(n - 1, n - 1)), rng);
  return V * W;
}
}  // namespace

CMat moment(const CotangentPoint& p) { return p.x * p.xi * p.x.adjoint(); }

CMat nilpotent_moment(const CotangentPoint& p) {
  return p.x * strict_upper(p.xi) * p.x.adjoint();
}

TangentVector generator_field(const CotangentPoint& p, const CMat& Y) {
  const CMat z = p.x.adjoint() * Y * p.x;
  const CMat zeta = diag_part(z);
  return {z - zeta, commutator(zeta, p.xi)};
}

double hamiltonian_consistency(const CotangentPoint& p, const CMat& Y,
                               const TangentVector& v, double step) {
  auto energy = [&](double t) {
    CotangentPoint c{unitarize(p.x * exp_skew(t * v.a)), p.xi + t * v.eta};
    return pairing(moment(c), Y);
  };
  const double dH = (energy(step) - energy(-step)) / (2.0 * step);
  const double flow = symplectic_form(p, generator_field(p, Y), v);
  return std::abs(dH - flow);
}

Chamber::Chamber(RVec values) : p(std::move(values)) {
  if (p.size() < 2) throw std::invalid_argument("chamber: n >= 2 required");
  if (std::abs(p.sum()) > 1e-12 * std::max(1.0, p.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("chamber: entries must sum to zero");
}

bool Chamber::strictly_decreasing() const {
  for (Eigen::Index k = 0; k + 1 < p.size(); ++k)
    if (!(p(k) > p(k + 1))) return false;
  return true;
}

CotangentPoint sample_fiber(const RVec& p, Rng& rng) {
  const int n = static_cast<int>(p.size());
  if (n < 2) throw std::invalid_argument("sample_fiber: n >= 2 required");
  if (std::abs(p.sum()) > 1e-10 * std::max(1.0, p.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("sample_fiber: entries must sum to zero");
  CMat diag = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k) diag(k, k) = p(k);
  if (p.cwiseAbs().maxCoeff() == 0.0) {
    return {random_su(n, rng), CMat::Zero(n, n)};
  }
  CMat x = zero_diag_frame(diag, rng);
  const Complex det = x.determinant();
  x *= std::exp(-kI * (std::arg(det) / n));
  CMat xi = zero_diag(hermitize(x.adjoint() * diag * x));
  // random torus representative
  CMat t = CMat::Identity(n, n);
  double sum = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    const double th = rng.angle();
    t(k, k) = std::exp(kI * th);
    sum += th;
  }
  t(n - 1, n - 1) = std::exp(-kI * sum);
  return {x * t, t.adjoint() * xi * t};
}

int moment_rank(const CotangentPoint& p, double rel_tol) {
  const int n = p.dim();
  const auto basis = tangent_basis(n);
  RMat jac(2 * n * n, static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const CMat img =
        adjoint_action(p.x, commutator(basis[k].a, p.xi) + basis[k].eta);
    int row = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        jac(row++, static_cast<int>(k)) = img(r, c).real();
        jac(row++, static_cast<int>(k)) = img(r, c).imag();
      }
  }
  Eigen::JacobiSVD<RMat> svd(jac);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > rel_tol * sv(0)) ++rank;
  return rank;
}

int full_moment_rank(int n) { return n * n - 1; }

SubsetSum zero_subset_sum(const RVec& p, double tol) {
  const int n = static_cast<int>(p.size());
  if (n > 20) throw std::invalid_argument("zero_subset_sum: n too large");
  SubsetSum out;
  const unsigned total = 1u << n;
  for (unsigned mask = 1; mask + 1 < total; ++mask) {
    double s = 0.0;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) s += p(k);
    if (std::abs(s) <= tol) {
      out.found = true;
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) out.subset.push_back(k);
      return out;
    }
  }
  return out;
}

bool is_singular_value(const Chamber& c) {
  if (!c.strictly_decreasing())
    throw std::invalid_argument("is_singular_value: chamber wall (repeated entries)");
  return zero_subset_sum(c.p).found;
}

CotangentPoint singular_fiber_witness(const RVec& p, const std::vector<int>& subset,
                                      Rng& rng) {
  const int n = static_cast<int>(p.size());
  if (subset.empty() || static_cast<int>(subset.size()) >= n)
    throw std::invalid_argument("singular_fiber_witness: proper nonempty subset required");
  std::vector<int> comp;
  std::vector<bool> in(n, false);
  for (int k : subset) in[k] = true;
  for (int k = 0; k < n; ++k)
    if (!in[k]) comp.push_back(k);

  auto block_sample = [&](const std::vector<int>& idx) -> CotangentPoint {
    RVec sub(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) sub(static_cast<int>(k)) = p(idx[k]);
    // re-center tiny residuals so the sub-chamber sums to zero exactly
    sub.array() -= sub.sum() / static_cast<double>(sub.size());
    if (idx.size() == 1) return {CMat::Identity(1, 1), CMat::Zero(1, 1)};
    return sample_fiber(sub, rng);
  };

  const CotangentPoint a = block_sample(subset);
  const CotangentPoint b = block_sample(comp);
  CMat x = CMat::Zero(n, n);
  CMat xi = CMat::Zero(n, n);
  for (std::size_t r = 0; r < subset.size(); ++r)
    for (std::size_t c = 0; c < subset.size(); ++c) {
      x(subset[r], subset[c]) = a.x(r, c);
      xi(subset[r], subset[c]) = a.xi(r, c);
    }
  for (std::size_t r = 0; r < comp.size(); ++r)
    for (std::size_t c = 0; c < comp.size(); ++c) {
      x(comp[r], comp[c]) = b.x(r, c);
      xi(comp[r], comp[c]) = b.xi(r, c);
    }
  return {x, xi};
}

}  // namespace flagtwist

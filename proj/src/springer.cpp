#include "flagtwist/springer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flagtwist {

namespace {

// Singular values of m, descending.
RVec singular_values(const CMat& m) {
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues();
}

Partition partition_from_ranks(const std::vector<int>& ranks) {
  // ranks[k] = rank(u^k), ranks[0] = n.  Conjugate parts are
  // c_k = ranks[k-1] - ranks[k]; the partition is the conjugate of c.
  std::vector<int> conj;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    const int c = ranks[k - 1] - ranks[k];
    if (c > 0) conj.push_back(c);
  }
  std::sort(conj.begin(), conj.end(), std::greater<int>());
  Partition p;
  if (conj.empty()) return p;
  for (int size = 1; size <= conj[0]; ++size) {
    int count = 0;
    for (int c : conj)
      if (c >= size) ++count;
    p.parts.push_back(count);
  }
  std::sort(p.parts.begin(), p.parts.end(), std::greater<int>());
  return p;
}

Partition jordan_at_tol(const CMat& u, double tol) {
  const int n = static_cast<int>(u.rows());
  const double scale = singular_values(u)(0);
  std::vector<int> ranks{n};
  CMat power = CMat::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    power = power * u;
    const RVec sv = singular_values(power);
    const double thresh = tol * std::pow(std::max(scale, 1e-300), k);
    int rank = 0;
    for (Eigen::Index j = 0; j < sv.size(); ++j)
      if (sv(j) > thresh) ++rank;
    ranks.push_back(rank);
    if (rank == 0) break;
  }
  if (ranks.back() != 0)
    throw std::invalid_argument("jordan_partition: input is not nilpotent");
  return partition_from_ranks(ranks);
}

}  // namespace

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += '+';
    s += std::to_string(parts[k]);
  }
  return s.empty() ? "0" : s;
}

Partition jordan_partition(const CMat& u, double tol) {
  if (u.rows() != u.cols()) throw std::invalid_argument("jordan_partition: square input");
  if (singular_values(u)(0) == 0.0) {
    Partition p;
    p.parts.assign(u.rows(), 1);
    return p;
  }
  return jordan_at_tol(u, tol);
}

JordanResult jordan_partition_checked(const CMat& u, double tol) {
  JordanResult out;
  if (singular_values(u)(0) == 0.0) {
    out.partition.parts.assign(u.rows(), 1);
    return out;
  }
  out.partition = jordan_at_tol(u, tol);
  const Partition lo = jordan_at_tol(u, tol / 10.0);
  const Partition hi = jordan_at_tol(u, tol * 10.0);
  if (!(lo == out.partition) || !(hi == out.partition)) {
    out.ambiguous = true;
    out.alternate = (lo == out.partition) ? hi : lo;
  }
  return out;
}

std::string to_string(SpringerClass c) {
  switch (c) {
    case SpringerClass::Regular: return "regular";
    case SpringerClass::Subregular: return "subregular";
    default: return "other";
  }
}

SpringerClass classify_partition(const Partition& p, int n) {
  if (p.parts.size() == 1 && p.parts[0] == n) return SpringerClass::Regular;
  if (p.parts.size() == 2 && p.parts[0] == n - 1 && p.parts[1] == 1)
    return SpringerClass::Subregular;
  return SpringerClass::Other;
}

SpringerClass springer_class(const CotangentPoint& p, double tol) {
  return classify_partition(jordan_partition(strict_upper(p.xi), tol), p.dim());
}

FiberNormalForm fiber_normal_form(const CotangentPoint& p, double tol) {
  const int n = p.dim();
  if (n < 3) throw std::invalid_argument("fiber_normal_form: n >= 3 required");
  CMat target = CMat::Zero(n, n);
  target(0, 0) = 1.0;
  target(1, 1) = -1.0;
  if ((moment(p) - target).norm() > tol)
    throw std::invalid_argument("fiber_normal_form: moment value is not diag(1,-1,0,...)");

  const CMat block = hermitize(p.xi.topLeftCorner(n - 1, n - 1));
  HermEigs eig = hermitian_eigs(block);
  FiberNormalForm out;
  double eps = eig.values(0);
  // contract: spectrum {eps, -eps, 0...}; clamp roundoff at the ends
  eps = std::min(std::max(eps, 0.0), 1.0);
  out.epsilon = eps;
  // column order (max, min, middles) rotates the block to diag(eps, -eps, 0..)
  CMat y(n - 1, n - 1);
  y.col(0) = eig.vectors.col(0);
  y.col(1) = eig.vectors.col(n - 2);
  for (int k = 1; k + 1 < n - 1; ++k) y.col(k + 1) = eig.vectors.col(k);
  out.a = y.adjoint() * p.xi.topRightCorner(n - 1, 1);
  if (std::abs(out.a(0)) > 1e-14 && std::abs(out.a(1)) > 1e-14)
    out.theta = std::arg(out.a(1) * std::conj(out.a(0)));
  return out;
}

NormalFormResiduals normal_form_residuals(const FiberNormalForm& f) {
  NormalFormResiduals r{};
  const double m1 = std::norm(f.a(0));
  const double m2 = std::norm(f.a(1));
  r.pair_mismatch = std::abs(m1 - m2);
  r.magnitude_mismatch = std::abs(m1 - 0.5 * (1.0 - f.epsilon * f.epsilon));
  r.tail = 0.0;
  for (Eigen::Index j = 2; j < f.a.size(); ++j)
    r.tail = std::max(r.tail, std::abs(f.a(j)));
  return r;
}

HookCensus hook_census(const RVec& p, int samples, Rng& rng) {
  const int n = static_cast<int>(p.size());
  if (n > 6) throw std::invalid_argument("hook_census: n <= 6");
  HookCensus census;
  for (int k = 0; k < samples; ++k) {
    const CotangentPoint pt = sample_fiber(p, rng);
    const JordanResult jr = jordan_partition_checked(strict_upper(pt.xi));
    census.counts[jr.partition] += 1;
    if (jr.ambiguous) {
      census.counts[jr.alternate] += 1;
      census.ambiguous += 1;
    }
  }
  return census;
}

}  // namespace flagtwist

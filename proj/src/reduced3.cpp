#include "flagtwist/reduced3.hpp"

#include <cmath>
#include <stdexcept>

namespace flagtwist {

namespace {
const Complex kI(0.0, 1.0);

double sq(double v) { return v * v; }
}  // namespace

double ReducedChart3::constraint_sum_residual() const {
  return std::abs(m12 + m13 + m23 - scale * scale);
}

double ReducedChart3::constraint_product_residual() const {
  return std::abs(nu * nu - m12 * m13 * m23);
}

ReducedChart3 project_chart(const CMat& xi, double tol) {
  if (xi.rows() != 3 || xi.cols() != 3)
    throw std::invalid_argument("project_chart: 3x3 input required");
  HermEigs eig = hermitian_eigs(hermitize(xi));
  const double N = eig.values(0);
  if (N <= 0.0 || std::abs(eig.values(1)) > tol * std::max(1.0, N) ||
      std::abs(eig.values(2) + N) > tol * std::max(1.0, N))
    throw std::invalid_argument("project_chart: spectrum is not {N, 0, -N}");
  ReducedChart3 c;
  c.scale = N;
  c.m12 = std::norm(xi(0, 1));
  c.m13 = std::norm(xi(0, 2));
  c.m23 = std::norm(xi(1, 2));
  c.nu = (xi(0, 1) * xi(1, 2) * std::conj(xi(0, 2))).imag();
  return c;
}

CMat lift_chart(const ReducedChart3& c, double tol) {
  const double N2 = c.scale * c.scale;
  if (c.m12 < 0 || c.m13 < 0 || c.m23 < 0 || c.scale <= 0)
    throw std::invalid_argument("lift_chart: negative chart values");
  if (c.constraint_sum_residual() > tol * std::max(1.0, N2) ||
      c.constraint_product_residual() > tol * std::max(1.0, N2 * N2 * N2))
    throw std::invalid_argument("lift_chart: infeasible chart values");
  const double r12 = std::sqrt(c.m12);
  const double r13 = std::sqrt(c.m13);
  const double r23 = std::sqrt(c.m23);
  // triple product xi_12 xi_23 conj(xi_13) must equal i*nu
  Complex x13(r13, 0.0);
  if (r12 * r13 * r23 > 0.0) {
    const Complex target = (c.nu >= 0.0) ? kI : -kI;
    x13 = r13 * std::conj(target);  // e^{i delta} with e^{-i delta} = +-i
  }
  CMat xi = CMat::Zero(3, 3);
  xi(0, 1) = r12;
  xi(1, 0) = r12;
  xi(1, 2) = r23;
  xi(2, 1) = r23;
  xi(0, 2) = x13;
  xi(2, 0) = std::conj(x13);
  return xi;
}

ReducedChart3 chart_vertex(int j, double N) {
  ReducedChart3 c;
  c.scale = N;
  switch (j) {
    case 1: c.m12 = N * N; break;
    case 2: c.m13 = N * N; break;
    case 3: c.m23 = N * N; break;
    default: throw std::out_of_range("chart_vertex: j in {1,2,3}");
  }
  return c;
}

ReducedChart3 tau_reduced(const ReducedChart3& c, int i, const TwistProfile& profile,
                          bool inverse) {
  if (i != 1 && i != 2) throw std::out_of_range("tau_reduced: i in {1,2}");
  const CMat xi = lift_chart(c);
  HermEigs eig = hermitian_eigs(xi);
  CMat x = CMat(eig.vectors.adjoint());
  const Complex det = x.determinant();
  x *= std::exp(-kI * (std::arg(det) / 3.0));
  const CotangentPoint p{x, xi};
  const CotangentPoint q = inverse ? tau_inverse(p, i, profile) : tau(p, i, profile);
  ReducedChart3 out = project_chart(q.xi);
  out.scale = c.scale;
  return out;
}

std::array<int, 3> vertex_permutation(int i, double N, const TwistProfile& profile) {
  if (N < profile.cutoff())
    throw std::invalid_argument("vertex_permutation: N >= cutoff required");
  std::array<int, 3> perm{};
  for (int j = 1; j <= 3; ++j) {
    const ReducedChart3 image = tau_reduced(chart_vertex(j, N), i, profile);
    const int k = nearest_vertex(image);
    if (k == 0)
      throw std::runtime_error("vertex_permutation: vertex image is not a vertex");
    perm[j - 1] = k;
  }
  if (perm[0] + perm[1] + perm[2] != 6)
    throw std::runtime_error("vertex_permutation: image is not a permutation");
  return perm;
}

ReducedChart3 edge_point(int edge, double a, double N) {
  ReducedChart3 c;
  c.scale = N;
  const double s = N * N * sq(a);
  const double t = N * N * (1.0 - sq(a));
  switch (edge) {
    case 12: c.m12 = s; c.m13 = t; break;
    case 23: c.m13 = t; c.m23 = s; break;
    case 31: c.m12 = t; c.m23 = s; break;
    default: throw std::out_of_range("edge_point: edge in {12, 23, 31}");
  }
  return c;
}

bool on_edge(const ReducedChart3& c, int edge, double rel_tol) {
  const double tol = rel_tol * c.scale * c.scale;
  switch (edge) {
    case 12: return c.m23 <= tol;
    case 23: return c.m12 <= tol;
    case 31: return c.m13 <= tol;
    default: throw std::out_of_range("on_edge: edge in {12, 23, 31}");
  }
}

int nearest_vertex(const ReducedChart3& c, double rel_tol) {
  const double tol = rel_tol * c.scale * c.scale;
  for (int j = 1; j <= 3; ++j) {
    const ReducedChart3 v = chart_vertex(j, c.scale);
    const double d = std::max({std::abs(c.m12 - v.m12), std::abs(c.m13 - v.m13),
                               std::abs(c.m23 - v.m23)});
    if (d <= tol) return j;
  }
  return 0;
}

EdgeTrace trace_edge_image(int i, int edge, int samples, double N,
                           const TwistProfile& profile) {
  if (samples < 16) throw std::invalid_argument("trace_edge_image: samples >= 16");
  if (N < profile.cutoff())
    throw std::invalid_argument("trace_edge_image: N >= cutoff required");
  EdgeTrace trace;
  trace.param.reserve(samples);
  trace.image.reserve(samples);
  std::vector<bool> own(samples, false);
  for (int k = 0; k < samples; ++k) {
    const double a = static_cast<double>(k) / (samples - 1);
    const ReducedChart3 image = tau_reduced(edge_point(edge, a, N), i, profile);
    trace.param.push_back(a);
    trace.image.push_back(image);
    const bool vertex = nearest_vertex(image) != 0;
    const std::array<int, 3> edges{12, 23, 31};
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (edges[e] == edge) continue;
      if (on_edge(image, edges[e]) && !vertex) trace.interior_hits[e] += 1;
    }
    own[k] = on_edge(image, edge);
  }
  // contiguous runs of own-edge membership
  int run_start = -1;
  for (int k = 0; k <= samples; ++k) {
    const bool inside = k < samples && own[k];
    if (inside && run_start < 0) run_start = k;
    if (!inside && run_start >= 0) {
      trace.on_own_edge.push_back({trace.param[run_start], trace.param[k - 1]});
      run_start = -1;
    }
  }
  // reversal: endpoints swap and the parameter runs backwards along the edge
  const auto close = [&](const ReducedChart3& a, const ReducedChart3& b) {
    const double tol = 1e-6 * N * N;
    return std::abs(a.m12 - b.m12) <= tol && std::abs(a.m13 - b.m13) <= tol &&
           std::abs(a.m23 - b.m23) <= tol;
  };
  bool reversed = true;
  for (int k = 0; k < samples; ++k) {
    const double a = trace.param[k];
    if (!close(trace.image[k], edge_point(edge, std::sqrt(std::max(0.0, 1.0 - a * a)), N))) {
      reversed = false;
      break;
    }
  }
  trace.reversed = reversed;
  return trace;
}

}  // namespace flagtwist

#pragma once

#include <array>
#include <vector>

#include "flagtwist/twist.hpp"

namespace flagtwist {

// Torus-invariant coordinates of a point of the SU(3) reduced space over
// N*diag(1, 0, -1):
//   m12 = |xi_12|^2, m13 = |xi_13|^2, m23 = |xi_23|^2, nu = Im(xi_12 xi_23 xi_31).
// Constraints: m12 + m13 + m23 = N^2 and nu^2 = m12*m13*m23.  Vertices are
// Q1 = (N^2,0,0), Q2 = (0,N^2,0), Q3 = (0,0,N^2); edges have one coordinate
// zero; the two sheets (sign of nu) glue along the boundary to a 2-sphere.
struct ReducedChart3 {
  double m12 = 0.0;
  double m13 = 0.0;
  double m23 = 0.0;
  double nu = 0.0;
  double scale = 1.0;  // N

  double constraint_sum_residual() const;      // |m12+m13+m23 - N^2|
  double constraint_product_residual() const;  // |nu^2 - m12*m13*m23|
};

// Invariants of xi with spectrum {N, 0, -N}; rejects other spectra.
ReducedChart3 project_chart(const CMat& xi, double tol = 1e-8);

// Section of the quotient: phases xi_12 = sqrt(m12), xi_23 = sqrt(m23),
// xi_13 = sqrt(m13) e^{i delta} with delta solving the nu constraint.
CMat lift_chart(const ReducedChart3& c, double tol = 1e-7);

// Chart vertices Q1, Q2, Q3 at scale N.
ReducedChart3 chart_vertex(int j, double N);

// Induced action of the fiberwise twist on the chart: lift, twist, project.
ReducedChart3 tau_reduced(const ReducedChart3& c, int i, const TwistProfile& profile,
                          bool inverse = false);

// Permutation induced on {Q1, Q2, Q3}; perm[j] = k means Q_{j+1} -> Q_{k+1}.
// Requires N >= cutoff so that vertices map to vertices cleanly.
std::array<int, 3> vertex_permutation(int i, double N, const TwistProfile& profile);

// Edge trace through the induced twist.  Edges are named by their vertex
// pairs: 12 = {m23 = 0}, 23 = {m12 = 0}, 31 = {m13 = 0}.  An edge point is
// parametrized by a in [0, 1]:
//   edge 12: (N^2 a^2, N^2(1-a^2), 0),  a=1 -> Q1, a=0 -> Q2
//   edge 23: (0, N^2(1-a^2), N^2 a^2),  a=0 -> Q2, a=1 -> Q3
//   edge 31: (N^2(1-a^2), 0, N^2 a^2)
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};
struct EdgeTrace {
  std::vector<double> param;           // a values
  std::vector<ReducedChart3> image;    // chart points after the twist
  bool reversed = false;               // image runs the same edge backwards
  std::array<int, 3> interior_hits{};  // per edge {12, 23, 31}
  std::vector<Interval> on_own_edge;   // param intervals landing on the edge
};
ReducedChart3 edge_point(int edge, double a, double N);
EdgeTrace trace_edge_image(int i, int edge, int samples, double N,
                           const TwistProfile& profile);

// Edge membership tolerance: coordinate <= 1e-6 * N^2.
bool on_edge(const ReducedChart3& c, int edge, double rel_tol = 1e-6);
int nearest_vertex(const ReducedChart3& c, double rel_tol = 1e-6);  // 0 if none

}  // namespace flagtwist

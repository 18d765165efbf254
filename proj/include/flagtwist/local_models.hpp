#pragma once

#include <optional>
#include <utility>

#include "flagtwist/lie.hpp"

namespace flagtwist {

// Linear symplectomorphisms of C^2 commuting with the circle action
// e^{i theta} . (z0, z1) = (e^{-i theta} z0, e^{i theta} z1):
//   (z0, z1) -> (l1 e^{i t1} z0 + l2 e^{i t2} conj(z1),
//                l2 e^{i t3} conj(z0) + l1 e^{i t4} z1)
// with l1^2 - l2^2 = 1 and, when l2 != 0, t1 + t3 = t2 + t4 (mod 2pi).
// The phase constraint is forced by M^T J M = J; see the membership test.
struct Sp4Equivariant {
  double lambda1 = 1.0;
  double lambda2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;
};

// Real 4x4 representation in the basis (dx0, dy0, dx1, dy1).
Eigen::Matrix4d sp4_matrix(const Sp4Equivariant& e);

// Checks symplecticity (MtJM = J) and commutation with the rotation block
// R(-1 rad) + R(1 rad), then extracts the parameters.  Returns nullopt and
// the residual when the matrix is not in the group.
std::optional<Sp4Equivariant> sp4_membership(const Eigen::Matrix4d& m,
                                             double tol = 1e-9,
                                             double* residual = nullptr);

Sp4Equivariant sp4_compose(const Sp4Equivariant& a, const Sp4Equivariant& b);
Sp4Equivariant sp4_inverse(const Sp4Equivariant& e);
Sp4Equivariant sp4_center(double theta);  // (z0, z1) -> (e^{-i th} z0, e^{i th} z1)
Sp4Equivariant random_sp4(Rng& rng);

// Distance to the center along the invariants (0 for central elements).
double sp4_centrality_residual(const Sp4Equivariant& e);

// Invariants under composition with central elements, for comparing group
// elements mod center: (l1, l2, wrap(t1+t4), wrap(t2+t3)).
Eigen::Vector4d sp4_center_invariants(const Sp4Equivariant& e);

// Reduction of the zero level {|z0| = |z1|} of the moment map
// Phi = -|z0|^2 + |z1|^2 by the circle action: slice value of z1 after
// rotating z0 real positive, i.e. z0 z1 / sqrt(|z0 z1|).
Complex reduce_at_zero(Complex z0, Complex z1, double tol = 1e-10);

// Derivatives at t = 0 of the images of the two reduced rays z = +-t.
// Closed form: w+ = e^{i(t4 - t1)} A^2 / |A|, w- = -e^{i(t4 - t1)} B^2 / |B|
// with A = l1 e^{i t1} + l2 e^{i t2}, B = l1 e^{i t1} - l2 e^{i t2}.
std::pair<Complex, Complex> induced_rays(const Sp4Equivariant& e);

// Same derivatives by transporting (1,1) and (1,-1) through the matrix and
// the reduction (exact for linear maps at any probe scale).
std::pair<Complex, Complex> induced_rays_numeric(const Sp4Equivariant& e,
                                                 double t = 1e-4);

// Inverse problem: an element whose rays have the prescribed arguments.
// Rejects equal arguments (mod 2pi).
Sp4Equivariant solve_for_rays(double arg_plus, double arg_minus);

// ---------------------------------------------------------------------------
// Real blow-up local chart: disk side (z0, z) in C x C^k with moment
// -|z0|^2 + |z|^2, cylinder side ((t, s), z) in T*S^1 x C^k with moment
// -s + |z|^2 and form (1/2) ds ^ dt on the cylinder factor.  Transition on
// the annulus eps/2 <= |z0|^2 < eps:  t = arg z0, s = |z0|^2.
// ---------------------------------------------------------------------------

struct DiskPoint {
  Complex z0;
  CVec z;
};
struct CylinderPoint {
  double t = 0.0;
  double s = 0.0;
  CVec z;
};

CylinderPoint disk_to_cylinder(const DiskPoint& d);
DiskPoint cylinder_to_disk(const CylinderPoint& c);

double disk_moment(const DiskPoint& d);
double cylinder_moment(const CylinderPoint& c);

struct BlowupReport {
  double transition_symplectic = 0.0;  // FD residual on the annulus
  double transition_roundtrip = 0.0;
  double moment_agreement = 0.0;       // exact through s = |z0|^2
  double equivariance = 0.0;           // t shifts by -theta under rotation
  double min_gradient = 0.0;           // of the surgered moment below delta
  double weight0 = 0.0;                // linearized circle weights at 0
  double weight1 = 0.0;                // expected (-1, +1)
};
BlowupReport blowup_checks(double eps, double delta, int k, int samples, Rng& rng);

}  // namespace flagtwist

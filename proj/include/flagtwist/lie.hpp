#pragma once

#include <Eigen/Dense>
#include <complex>

#include "flagtwist/rng.hpp"

namespace flagtwist {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// ---------------------------------------------------------------------------
// Role predicates for the matrix spaces in play:
//   su(n)        skew-Hermitian traceless
//   i*su(n)      Hermitian traceless (covector side)
//   t            diagonal of su(n);  t_perp = Hermitian with zero diagonal
//   m            skew-Hermitian with zero diagonal (horizontal complement)
//   n            strictly upper triangular (nilradical)
// ---------------------------------------------------------------------------

double unitary_error(const CMat& x);            // ||x* x - I||_F
double special_unitary_error(const CMat& x);    // max(unitary_error, |det-1|)
double herm_traceless_error(const CMat& xi);
double skew_traceless_error(const CMat& a);
double herm_zero_diag_error(const CMat& xi);
double skew_zero_diag_error(const CMat& a);
double strict_upper_error(const CMat& u);

bool is_special_unitary(const CMat& x, double tol = 1e-10);
bool is_herm_zero_diag(const CMat& xi, double tol = 1e-10);

// Projections / parts
CMat hermitize(const CMat& m);       // (m + m*)/2
CMat skew_part(const CMat& m);       // (m - m*)/2
CMat zero_diag(CMat m);              // kill the diagonal
CMat diag_part(const CMat& m);       // keep only the diagonal
CMat commutator(const CMat& a, const CMat& b);

// Duality pairing between a Hermitian covector xi and a skew tangent a:
// pair(xi, a) = Re tr(xi * i a).  Real-valued, bilinear, Ad-invariant.
double pairing(const CMat& xi, const CMat& a);

// g m g^{-1} for unitary g
CMat adjoint_action(const CMat& g, const CMat& m);

// Eigendecomposition of a Hermitian matrix with a reproducible normal form:
// eigenvalues sorted descending, each eigenvector scaled so that its first
// component of largest modulus is real positive.
struct HermEigs {
  RVec values;   // descending
  CMat vectors;  // columns, unitary
};
HermEigs hermitian_eigs(const CMat& h);

// exp of a skew-Hermitian matrix via the eigendecomposition of i*a.
CMat exp_skew(const CMat& a);

// QR-based re-orthonormalization (diagonal of R made real positive).
CMat unitarize(const CMat& x);

// Haar sample from SU(n): unitary factor of a complex Gaussian with the
// R-diagonal phases absorbed, then a scalar phase to land in SU(n).
CMat random_su(int n, Rng& rng);

// Random elements of the Lie-algebra slices, Frobenius-normalized scale ~ 1.
CMat random_herm_zero_diag(int n, Rng& rng);
CMat random_skew_zero_diag(int n, Rng& rng);
CMat random_skew_traceless(int n, Rng& rng);

// Strictly upper part u of a Hermitian xi with zero diagonal; u + u* = xi.
CMat strict_upper(const CMat& xi);

// Projection of xi onto the root plane at (i, i+1), 1-based i in [1, n-1].
// modulus is the entry modulus |xi_{i,i+1}|.
struct RootComponent {
  CMat part;       // only entries (i,i+1), (i+1,i) kept
  double modulus;  // |xi_{i,i+1}|
};
RootComponent root_component(const CMat& xi, int i);

// Normalized Weyl representative for the simple reflection at (i, i+1):
// identity except the 2x2 block [[0, i], [i, 0]].  Lies in SU(n); its square
// is the torus element diag(..,-1,-1,..).
CMat weyl_element(int i, int n);

// exp(theta * i * u) where u is the unit root-plane matrix with entry phase
// carried by `entry` at (i, i+1).  Closed form on the 2x2 block:
// cos(theta) I + i sin(theta) u.
CMat root_plane_rotation(int i, int n, Complex unit_entry, double theta);

}  // namespace flagtwist

#pragma once

#include <vector>

#include "flagtwist/phase_space.hpp"

namespace flagtwist {

// Moment map of the left SU(n)-action: (x, xi) -> x xi x*.
CMat moment(const CotangentPoint& p);

// Nilpotent-valued factor: (x, xi) -> x u x* with u the strict upper part of
// xi (so u + u* = xi).  Its value is nilpotent.
CMat nilpotent_moment(const CotangentPoint& p);

// Chart expression of the generator vector field of Y in su(n):
//   ( proj_m(Ad_{x^-1} Y), [proj_t(Ad_{x^-1} Y), xi] ).
TangentVector generator_field(const CotangentPoint& p, const CMat& Y);

// |dH_Y(v) - omega(generator_field, v)| with H_Y = pair(moment, Y) and dH_Y
// taken by central differences along v's curve.  Pins the sign convention of
// the symplectic form.
double hamiltonian_consistency(const CotangentPoint& p, const CMat& Y,
                               const TangentVector& v, double step = 1e-5);

// Diagonal moment values.  Entries sum to zero; is_singular_value requires a
// strictly decreasing vector (open chamber).
struct Chamber {
  RVec p;
  explicit Chamber(RVec values);
  bool strictly_decreasing() const;
};

// Constructive sampler of the fiber over diag(p): returns (x, xi) with
// xi = x* diag(p) x of zero diagonal, so moment = diag(p).  Recursive
// zero-diagonal reduction; randomized but not uniform on the fiber.
CotangentPoint sample_fiber(const RVec& p, Rng& rng);

// Rank of the differential (a, eta) -> Ad_x([a, xi] + eta); full rank equals
// n^2 - 1 (the target dimension).
int moment_rank(const CotangentPoint& p, double rel_tol = 1e-8);
int full_moment_rank(int n);

// Exact enumeration of proper nonempty subsets with |sum| <= tol.
struct SubsetSum {
  bool found = false;
  std::vector<int> subset;  // 0-based indices into p
};
SubsetSum zero_subset_sum(const RVec& p, double tol = 1e-12);

// Criterion for p being a singular value of the moment map over the open
// chamber: some proper subset of entries sums to zero.  Rejects chamber
// walls (repeated entries).
bool is_singular_value(const Chamber& c);

// A fiber point over diag(p) whose stabilizer is positive-dimensional,
// assembled block-diagonally from the zero-sum subset.  The moment-map
// differential drops rank there.
CotangentPoint singular_fiber_witness(const RVec& p, const std::vector<int>& subset,
                                      Rng& rng);

}  // namespace flagtwist

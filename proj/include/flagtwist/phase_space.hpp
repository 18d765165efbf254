#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "flagtwist/lie.hpp"

namespace flagtwist {

// A representative (x, xi) of a point of T*(SU(n)/T) ~ G x_T t_perp.
// Two representatives are equivalent iff they differ by a diagonal torus
// element t:  (x, xi) ~ (x t, t* xi t).
struct CotangentPoint {
  CMat x;   // special unitary
  CMat xi;  // Hermitian, zero diagonal

  int dim() const { return static_cast<int>(x.rows()); }
  void validate(double tol = 1e-8) const;
};

// Chart tangent vector at (x, xi): the curve t -> (x exp(t a), xi + t eta)
// with a skew-Hermitian zero-diagonal and eta Hermitian zero-diagonal.
struct TangentVector {
  CMat a;
  CMat eta;
};

CotangentPoint random_point(int n, Rng& rng, double xi_scale = 1.0);

// Distance through the torus quotient: align the unitary factors by the best
// diagonal phase matrix and measure the residuals.
double points_distance(const CotangentPoint& p, const CotangentPoint& q);
bool points_equal(const CotangentPoint& p, const CotangentPoint& q, double tol);

// Re-represent q by the torus element bringing its unitary factor closest to
// ref's.  Needed when finite-differencing curves of equivalence classes.
CotangentPoint align_to(const CotangentPoint& q, const CotangentPoint& ref);

// Transport a tangent vector along the representative change
// (x, xi) -> (x t, t* xi t).
TangentVector transport_torus(const TangentVector& v, const CMat& t);

// The symplectic form in the chart:
//   omega(v1, v2) = pair(eta2, a1) - pair(eta1, a2) + pair(xi, [a1, a2]).
// The overall sign is pinned by the moment-map consistency suite.
double symplectic_form(const CotangentPoint& p, const TangentVector& v1,
                       const TangentVector& v2);

// Real basis of the chart tangent space; dimension 2(n^2 - n).
std::vector<TangentVector> tangent_basis(int n);

using PointMap = std::function<CotangentPoint(const CotangentPoint&)>;

// Central-difference pushforward of v through `map`, with torus re-alignment
// of the probe images and re-orthonormalized group factors.
TangentVector pushforward(const PointMap& map, const CotangentPoint& p,
                          const TangentVector& v, double step);

// Max entrywise discrepancy between the omega-Gram matrices of a full tangent
// basis before and after the map.  ~0 for a symplectomorphism.
double pullback_error(const PointMap& map, const CotangentPoint& p,
                      double step = 1e-5);

void to_json(nlohmann::json& j, const CotangentPoint& p);
void from_json(const nlohmann::json& j, CotangentPoint& p);
void to_json(nlohmann::json& j, const TangentVector& v);
void from_json(const nlohmann::json& j, TangentVector& v);

nlohmann::json cmat_to_json(const CMat& m);
CMat cmat_from_json(const nlohmann::json& j, int n);

}  // namespace flagtwist

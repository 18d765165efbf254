#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagtwist/moment.hpp"

namespace flagtwist {

// Weakly decreasing positive parts summing to n.
struct Partition {
  std::vector<int> parts;

  int weight() const;
  std::string str() const;  // e.g. "3+1"
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// Jordan type of a nilpotent matrix from the rank sequence of its powers.
// Rank thresholds scale with ||u||^k; throws if u is not nilpotent to tol.
Partition jordan_partition(const CMat& u, double tol = 1e-8);

// Same, with a report of threshold-margin ambiguity: when some singular value
// sits near a rank threshold the partition at tol/10 and tol*10 may differ.
struct JordanResult {
  Partition partition;
  bool ambiguous = false;
  Partition alternate;  // set when ambiguous
};
JordanResult jordan_partition_checked(const CMat& u, double tol = 1e-8);

enum class SpringerClass { Regular, Subregular, Other };
std::string to_string(SpringerClass c);

SpringerClass classify_partition(const Partition& p, int n);
SpringerClass springer_class(const CotangentPoint& p, double tol = 1e-8);

// Normal form of a fiber point over diag(1,-1,0,...,0): the leading
// (n-1)-block has spectrum {eps, -eps, 0, ...}; after rotating it to
// diag(eps, -eps, 0, ...) the last column becomes the bordering vector a.
// Generic contract: |a1|^2 = |a2|^2 = (1 - eps^2)/2 and a_j = 0 for j >= 3.
struct FiberNormalForm {
  double epsilon = 0.0;
  CVec a;              // length n-1
  double theta = 0.0;  // arg(a2 conj(a1)), 0 when degenerate
};
FiberNormalForm fiber_normal_form(const CotangentPoint& p, double tol = 1e-8);

// Residuals of the normal-form contract, all expected <= tol for fiber
// samples: { ||a1|^2-|a2|^2|, ||a1|^2-(1-eps^2)/2|, max_{j>=3}|a_j| }.
struct NormalFormResiduals {
  double pair_mismatch;
  double magnitude_mismatch;
  double tail;
};
NormalFormResiduals normal_form_residuals(const FiberNormalForm& f);

// Sampling census of Jordan types over the fiber of diag(p); report only.
struct HookCensus {
  std::map<Partition, int> counts;
  int ambiguous = 0;
};
HookCensus hook_census(const RVec& p, int samples, Rng& rng);

}  // namespace flagtwist

#pragma once

#include <string>
#include <vector>

#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/scene.hpp"

namespace cluster_forge {

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;  // empty when pass
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool pass() const;
  const AuditCheck* find(std::string_view name) const;
};

/// Re-derives the construction's guarantees from f, its provenance and the
/// scene alone, without trusting the construction code.
///
/// Theorem 1 pairs (grouped into families by layer and anchor):
///   cond1  x not in L
///   cond2  dist(x, s) < 1/n
///   cond3  dist(x_{s,k}, s) strictly decreasing in k, k = 1..k_max
///   cond4  all domain points distinct, and distinct from L's sample
///   cond5  y is a point of the dense value grid Y
///   cond6  hausdorff({y_{s,k} : k >= k_max/2}, Phi(s)) <= 4/K
///   cond7  dist(y, Phi(s)) < 1/n
///   layers     anchors lie on L's sample and layer n is (3/n)-separated
///   a_closure  each family comes within 1/n_max of its anchor, and every
///              point of a layer >= n lies in B[L, 1/n]
/// Lemma 1 pairs:
///   lemma1_radius  r(x) > 0 and dist(x, h(x)) < 2 r(x)
///   lemma1_value   dist(f(x), Phi(h(x))) < r(x) and f(x) in Y
/// When both kinds are present (Theorem 2):
///   partition  dom f = D exactly
AuditReport audit_construction(const Scene& scene, const FunctionSample& f);

}  // namespace cluster_forge

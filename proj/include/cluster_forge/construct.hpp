#pragma once

#include <span>
#include <vector>

#include "cluster_forge/limit_sequences.hpp"
#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/nets.hpp"
#include "cluster_forge/scene.hpp"

namespace cluster_forge {

/// x_{s,1..k_max} and y_{s,1..k_max} for one anchor s of layer n.
struct AnchorFamily {
  int layer = 0;
  Point anchor;
  std::vector<Point> xs;
  std::vector<Point> ys;
};

struct Theorem1Result {
  std::vector<SampledSet> layers;  // S_1..S_{n_max}
  std::vector<Point> unassigned;   // L sample points outside S
  std::vector<AnchorFamily> families;
  FunctionSample f;

  std::vector<Point> domain() const;  // A, in admission order
};

struct Theorem2Result {
  Theorem1Result first;         // on D_1
  std::vector<Point> remainder; // D_2, in D order
  SampledSet boundary_part;     // L_2 sample
  FunctionSample second;        // Lemma 1 on D_2
  FunctionSample f;             // first.f followed by second
};

/// Anchor layers: L's sample scanned in input order and split greedily into
/// (3/n)-separated layers for n = 1..n_max.
SeparatedLayers anchor_layers(const Scene& scene);

/// r_k = (1/n) 2^-k.
double placement_radius(int layer, int k);

/// Prescribed value sequence at an anchor of layer n: the limit-point
/// sequence of Phi(s) inside the level-0 value grid restricted to
/// B(Phi(s), 1/n).
LimitSequence anchor_value_sequence(const Scene& scene, const SampledSet& phi_s, int layer);

/// y_k read off a sequence: the k-th element (1-based) while it lasts, then
/// the last block repeated cyclically.
const Point& sequence_value(const LimitSequence& seq, int k);

/// f on `domain`: f(x) is a value-grid point within r(x) = dist(x, L) of the
/// first point of Phi(h(x)), h(x) the nearest point of L's sample.
FunctionSample lemma1_on(std::span<const Point> domain, const SetOracle& boundary,
                         const MultifunctionTable& phi, const ValueGrid& y_dense, Metric m);

/// Lemma 1 on the scene's explicit D.
FunctionSample construct_lemma1(const Scene& scene);

/// Theorem 1 with free placement: x_{s,k} = s + r_k u for the lattice
/// direction u that keeps the point farthest from L.
Theorem1Result construct_theorem1(const Scene& scene);

/// Theorem 1 with every x_{s,k} drawn from `domain`.
Theorem1Result construct_theorem1_in(const Scene& scene, const SampledSet& domain);

/// L_2 and Phi_2 for a remainder D_2: the L sample points within D's
/// resolution of D_2 and Phi restricted to them. Falls back to L and Phi
/// when D_2 stays away from L.
struct BoundaryPart {
  SampledSet sample;
  SetOracle boundary;
  MultifunctionTable phi;
};
BoundaryPart remainder_boundary(const Scene& scene, std::span<const Point> remainder);

/// Theorem 1 on D_1 inside the explicit D, then Lemma 1 on D_2 = D \ D_1
/// against L_2 = points of L within D's resolution of D_2.
Theorem2Result construct_theorem2(const Scene& scene);

}  // namespace cluster_forge

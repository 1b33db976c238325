#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cluster_forge/metric.hpp"
#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/set_oracle.hpp"
#include "cluster_forge/value_grid.hpp"

namespace cluster_forge {

struct Depths {
  int n_max = 6;  // layers S_1..S_{n_max}
  int k_max = 64; // points per anchor
  int K = 8;      // limit-sequence blocks
};

enum class MatchMode { kEquality, kContainment };

std::string_view to_string(MatchMode m);
MatchMode match_mode_from_string(std::string_view name);

enum class ProbeSet { kKeys, kAnchors };

struct VerifyConfig {
  std::optional<double> delta_min;  // default: 0.2 * diam(X) / 2^(steps-1)
  int steps = 8;
  std::optional<MatchMode> mode;     // default per command
  ProbeSet probe_set = ProbeSet::kKeys;
  std::optional<std::size_t> probes; // evenly spaced subsample size
  std::optional<double> tol;         // default: 2/n_max + 2*value_res + delta_min
};

struct UscConfig {
  double delta = 0.05;
  double eps = 0.1;
};

struct Scene {
  std::size_t dimension = 1;
  Metric metric = Metric::kEuclidean;
  Box x_box;
  double x_resolution = 0.05;  // nowhere-density probe grid spacing
  SetOracle boundary{SampledSet{}, Metric::kEuclidean};  // L
  MultifunctionTable phi;
  std::optional<SampledSet> domain;  // explicit D; nullopt means free
  ValueGrid y_dense;
  Depths depths;
  std::uint64_t seed = 0;
  UscConfig usc;
  VerifyConfig verify;

  double delta_min() const;
  std::vector<double> delta_schedule() const;
};

struct SceneDiagnostics {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool nowhere_dense = true;
  UscReport usc;
  std::vector<ModulusRow> modulus_ladder;

  bool valid() const noexcept { return errors.empty(); }
};

/// Checks the scene invariants (sample sizes, key placement, D versus L),
/// probes nowhere-density of L on a grid of spacing x_resolution, runs
/// usc_check at the configured (delta, eps) and measures the modulus ladder.
SceneDiagnostics validate_scene(const Scene& scene);

/// Throws SceneError carrying the first diagnostic if the scene is invalid.
void require_valid(const Scene& scene);

/// Nowhere-density probe: within every ball B(p, spacing) around lattice
/// points p of the box there is a point off L. Returns the first failing
/// probe, if any.
std::optional<Point> interior_witness(const SetOracle& boundary, const Box& x_box,
                                      double spacing);

}  // namespace cluster_forge

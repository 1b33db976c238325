#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/scene.hpp"

namespace cluster_forge {

/// tol = 2/n_max + 2 * value_resolution + delta_min, kept by component.
struct ToleranceBreakdown {
  double layer_term = 0.0;
  double value_term = 0.0;
  double delta_term = 0.0;
  std::optional<double> override_value;

  double formula() const { return layer_term + value_term + delta_term; }
  double total() const { return override_value.value_or(formula()); }
};

ToleranceBreakdown default_tolerance(int n_max, double value_resolution, double delta_min);

struct ProbeResult {
  Point probe;
  std::vector<double> distance_per_delta;  // up to the first empty ball
  double distance = 0.0;                   // at the smallest delta
  bool trend_nonincreasing = true;         // over the last three entries
  bool pass = false;
  std::optional<std::string> error;
};

struct VerifyReport {
  MatchMode mode = MatchMode::kEquality;
  std::vector<double> deltas;
  double tol = 0.0;
  std::vector<ProbeResult> per_probe;
  std::optional<std::size_t> worst;  // largest distance among probes without error
  bool pass = false;
};

/// Empirical cluster set E(a) of f at each probe a over the schedule,
/// compared with Phi(a): Hausdorff distance in equality mode, the directed
/// distance sup dist(E(a), Phi(a)) in containment mode. A probe passes when
/// its distance at the smallest delta is at most tol. A probe where dom f
/// misses some ball gets an error entry and fails.
VerifyReport verify_cluster_match(const FunctionSample& f, const MultifunctionTable& phi,
                                  std::span<const Point> probes,
                                  std::span<const double> delta_schedule, double tol,
                                  MatchMode mode, Metric m = Metric::kEuclidean);

/// Distinct anchors recorded in f's provenance, in order of first use. When
/// f has Theorem 1 pairs only their anchors count.
std::vector<Point> provenance_anchors(const FunctionSample& f);

/// `count` evenly spaced elements of `points` (all of them when count is
/// absent or not smaller).
std::vector<Point> evenly_spaced(const std::vector<Point>& points,
                                 std::optional<std::size_t> count);

/// Probe set of a scene for f: Phi's keys or f's anchors, then subsampled.
std::vector<Point> select_probes(const Scene& scene, const FunctionSample& f, ProbeSet set,
                                 std::optional<std::size_t> count);

}  // namespace cluster_forge

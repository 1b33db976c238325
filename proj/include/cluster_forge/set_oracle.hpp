#pragma once

#include <functional>
#include <optional>

#include "cluster_forge/metric.hpp"

namespace cluster_forge {

/// A closed set given by a dense finite sample plus a distance function.
/// The distance function is exact when the set has a closed form (an
/// axis-aligned box, possibly degenerate) and falls back to the sample.
class SetOracle {
 public:
  /// Sample-based oracle: dist(p) = dist_to_set(p, sample).
  SetOracle(SampledSet sample, Metric metric);

  /// Exact oracle for a (possibly degenerate) box sampled at `step`.
  static SetOracle from_box(const Box& box, double step, Metric metric);

  const SampledSet& sample() const noexcept { return sample_; }
  Metric metric() const noexcept { return metric_; }
  bool is_exact() const noexcept { return box_.has_value(); }
  const std::optional<Box>& box() const noexcept { return box_; }

  double distance(const Point& p) const;

  /// Same set restricted to a sub-sample; distance becomes sample based
  /// unless the sub-sample is the full sample.
  SetOracle restricted_to(SampledSet sub) const;

 private:
  SampledSet sample_;
  Metric metric_;
  std::optional<Box> box_;
};

}  // namespace cluster_forge

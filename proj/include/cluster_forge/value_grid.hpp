#pragma once

#include <optional>

#include "cluster_forge/metric.hpp"

namespace cluster_forge {

/// Countable dense subset Y of the value box: the union over levels j >= 0
/// of the lattices lo + (step / 2^j) Z^d clipped to the box. Level 0 is the
/// working grid; finer levels let "a point of Y within r" succeed for radii
/// far below the working step (down to step * 2^-kMaxLevel).
class ValueGrid {
 public:
  static constexpr int kMaxLevel = 24;

  ValueGrid() = default;
  ValueGrid(Box box, double step);

  const Box& box() const noexcept { return box_; }
  double step() const noexcept { return step_; }
  std::size_t dimension() const noexcept { return box_.dimension(); }

  /// Level-0 lattice points inside the box that lie within open distance
  /// `radius` of `target`.
  SampledSet base_points_near(const SampledSet& target, double radius, Metric m) const;

  /// Coarsest lattice point with dist(., target) < r; nullopt when even
  /// level kMaxLevel misses.
  std::optional<Point> snap_within(const Point& target, double r, Metric m) const;

  /// Whether `p` is a lattice point of some level <= kMaxLevel.
  bool contains(const Point& p) const;

 private:
  Point snap_at_level(const Point& target, int level) const;

  Box box_;
  double step_ = 1.0;
};

}  // namespace cluster_forge

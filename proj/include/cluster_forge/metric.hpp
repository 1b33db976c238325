#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cluster_forge {

/// A point of R^d. Coordinates are finite; the dimension is fixed per scene.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

std::string to_string(const Point& p);

enum class Metric { kEuclidean, kChebyshev, kManhattan };

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view name);

/// Norm of a coordinate difference vector under `m`.
double norm(std::span<const double> v, Metric m);

double dist(const Point& p, const Point& q, Metric m = Metric::kEuclidean);

/// Axis-aligned box [lo, hi]. Degenerate extents are allowed (segments,
/// single points).
struct Box {
  Point lo;
  Point hi;

  std::size_t dimension() const noexcept { return lo.dimension(); }
  bool contains(const Point& p, double slack = 0.0) const;
  Point clamp(const Point& p) const;
  double diameter(Metric m) const { return dist(lo, hi, m); }
};

/// Exact distance from `p` to the box under any of the supported norms;
/// attained at the coordinate-wise clamp of `p`.
double dist_to_box(const Point& p, const Box& box, Metric m);

/// Finite point sample standing in for a possibly infinite set. Points are
/// pairwise distinct and share one dimension; `resolution` bounds how far
/// the ideal set can stray from the sample.
class SampledSet {
 public:
  SampledSet() = default;
  SampledSet(std::vector<Point> points, double resolution);

  /// Drops exact duplicates (first occurrence wins) instead of rejecting them.
  static SampledSet deduplicated(std::vector<Point> points, double resolution);

  const std::vector<Point>& points() const noexcept { return points_; }
  double resolution() const noexcept { return resolution_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t dimension() const noexcept {
    return points_.empty() ? 0 : points_.front().dimension();
  }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  bool contains(const Point& p) const;

 private:
  std::vector<Point> points_;
  double resolution_ = 1.0;
};

/// Min over the sample of dist(p, .). Throws InputError on an empty set.
double dist_to_set(const Point& p, const SampledSet& s, Metric m = Metric::kEuclidean);
double dist_to_set(const Point& p, std::span<const Point> s, Metric m = Metric::kEuclidean);

/// Points of `s` with dist < r (open) or dist <= r (closed) from `center`.
SampledSet ball_filter(const SampledSet& s, const Point& center, double r, bool closed,
                       Metric m = Metric::kEuclidean);

/// sup over a in A of dist(a, B).
double directed_hausdorff(std::span<const Point> a, std::span<const Point> b,
                          Metric m = Metric::kEuclidean);

double hausdorff(const SampledSet& a, const SampledSet& b, Metric m = Metric::kEuclidean);
double hausdorff(std::span<const Point> a, std::span<const Point> b,
                 Metric m = Metric::kEuclidean);

double diameter(const SampledSet& a, Metric m = Metric::kEuclidean);
double diameter(std::span<const Point> a, Metric m = Metric::kEuclidean);

/// Evenly spaced points covering `box` with per-axis spacing at most `step`.
/// Both ends of every axis are included.
std::vector<Point> box_lattice(const Box& box, double step);

}  // namespace cluster_forge

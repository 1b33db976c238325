#pragma once

// Brute-force reference computations, written independently of the library
// so that tests compare two implementations rather than one with itself.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "cluster_forge/metric.hpp"

namespace oracle {

using cluster_forge::Metric;
using cluster_forge::Point;

inline double dist(const Point& p, const Point& q, Metric m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    const double t = std::fabs(p[i] - q[i]);
    if (m == Metric::kEuclidean) acc += t * t;
    if (m == Metric::kChebyshev) acc = std::max(acc, t);
    if (m == Metric::kManhattan) acc += t;
  }
  return m == Metric::kEuclidean ? std::sqrt(acc) : acc;
}

inline double dist_to_set(const Point& p, const std::vector<Point>& s,
                          Metric m = Metric::kEuclidean) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : s) best = std::min(best, oracle::dist(p, q, m));
  return best;
}

inline double directed(const std::vector<Point>& a, const std::vector<Point>& b,
                       Metric m = Metric::kEuclidean) {
  double worst = 0.0;
  for (const Point& p : a) worst = std::max(worst, dist_to_set(p, b, m));
  return worst;
}

inline double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b,
                        Metric m = Metric::kEuclidean) {
  return std::max(directed(a, b, m), directed(b, a, m));
}

inline double diameter(const std::vector<Point>& a, Metric m = Metric::kEuclidean) {
  double d = 0.0;
  for (const Point& p : a)
    for (const Point& q : a) d = std::max(d, oracle::dist(p, q, m));
  return d;
}

inline std::vector<Point> line_grid(double lo, double hi, double step) {
  std::vector<Point> out;
  const auto n = static_cast<long>(std::llround((hi - lo) / step));
  for (long i = 0; i <= n; ++i) out.push_back(Point{lo + static_cast<double>(i) * step});
  return out;
}

inline std::vector<Point> random_cloud(std::mt19937_64& rng, std::size_t count, std::size_t d,
                                       double quantum = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> pts;
  std::vector<Point> sorted;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(d);
    for (double& x : c) {
      x = u(rng);
      if (quantum > 0.0) x = std::round(x / quantum) * quantum;
    }
    Point p(std::move(c));
    auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
    if (it != sorted.end() && *it == p) continue;
    sorted.insert(it, p);
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace oracle

#include "cluster_forge/value_grid.hpp"

#include <algorithm>
#include <cmath>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

ValueGrid::ValueGrid(Box box, double step) : box_(std::move(box)), step_(step) {
  if (!(step_ > 0.0)) throw InputError("value grid step must be positive");
}

SampledSet ValueGrid::base_points_near(const SampledSet& target, double radius,
                                       Metric m) const {
  if (target.empty()) throw InputError("value target set is empty");
  const std::size_t d = dimension();
  // Index range of the lattice covering bbox(target) enlarged by radius.
  std::vector<long long> first(d), last(d);
  for (std::size_t i = 0; i < d; ++i) {
    double lo = target[0][i], hi = target[0][i];
    for (const Point& p : target.points()) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    lo = std::max(lo - radius, box_.lo[i]);
    hi = std::min(hi + radius, box_.hi[i]);
    first[i] = static_cast<long long>(std::ceil((lo - box_.lo[i]) / step_ - 1e-9));
    last[i] = static_cast<long long>(std::floor((hi - box_.lo[i]) / step_ + 1e-9));
    if (last[i] < first[i]) return SampledSet({}, step_);
  }
  std::vector<Point> out;
  std::vector<long long> idx = first;
  std::vector<double> c(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = std::min(box_.lo[i] + static_cast<double>(idx[i]) * step_, box_.hi[i]);
    }
    Point p(c);
    if (dist_to_set(p, target, m) < radius) out.push_back(std::move(p));
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++idx[i] <= last[i]) {
        done = false;
        break;
      }
      idx[i] = first[i];
    }
    if (done) break;
  }
  return SampledSet::deduplicated(std::move(out), step_);
}

Point ValueGrid::snap_at_level(const Point& target, int level) const {
  const double h = std::ldexp(step_, -level);
  std::vector<double> c(dimension());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double t = std::clamp(target[i], box_.lo[i], box_.hi[i]);
    const double k = std::round((t - box_.lo[i]) / h);
    c[i] = std::min(box_.lo[i] + k * h, box_.hi[i]);
  }
  return Point(std::move(c));
}

std::optional<Point> ValueGrid::snap_within(const Point& target, double r, Metric m) const {
  for (int level = 0; level <= kMaxLevel; ++level) {
    Point p = snap_at_level(target, level);
    if (dist(p, target, m) < r) return p;
  }
  return std::nullopt;
}

bool ValueGrid::contains(const Point& p) const {
  if (!box_.contains(p, 1e-12)) return false;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double h = std::ldexp(step_, -level);
    bool on_lattice = true;
    for (std::size_t i = 0; i < dimension() && on_lattice; ++i) {
      if (p[i] == box_.hi[i]) continue;  // clipped endpoint
      const double k = std::round((p[i] - box_.lo[i]) / h);
      on_lattice = std::fabs(p[i] - (box_.lo[i] + k * h)) <= 1e-14 * std::max(1.0, std::fabs(p[i]));
    }
    if (on_lattice) return true;
  }
  return false;
}

}  // namespace cluster_forge

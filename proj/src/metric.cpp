#include "cluster_forge/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

namespace {

void require_same_dimension(const Point& p, const Point& q) {
  if (p.dimension() != q.dimension()) {
    throw InputError(fmt::format("dimension mismatch: {} vs {}", p.dimension(), q.dimension()));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
  }
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) out += ", ";
    out += fmt::format("{:.17g}", p[i]);
  }
  return out + ")";
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::kEuclidean: return "euclidean";
    case Metric::kChebyshev: return "chebyshev";
    case Metric::kManhattan: return "manhattan";
  }
  return "euclidean";
}

Metric metric_from_string(std::string_view name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "chebyshev") return Metric::kChebyshev;
  if (name == "manhattan") return Metric::kManhattan;
  throw InputError(fmt::format("unknown metric '{}'", name));
}

double norm(std::span<const double> v, Metric m) {
  double acc = 0.0;
  switch (m) {
    case Metric::kEuclidean:
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case Metric::kChebyshev:
      for (double x : v) acc = std::max(acc, std::fabs(x));
      return acc;
    case Metric::kManhattan:
      for (double x : v) acc += std::fabs(x);
      return acc;
  }
  return acc;
}

double dist(const Point& p, const Point& q, Metric m) {
  require_same_dimension(p, q);
  const std::size_t d = p.dimension();
  double acc = 0.0;
  switch (m) {
    case Metric::kEuclidean:
      for (std::size_t i = 0; i < d; ++i) {
        const double t = p[i] - q[i];
        acc += t * t;
      }
      return std::sqrt(acc);
    case Metric::kChebyshev:
      for (std::size_t i = 0; i < d; ++i) acc = std::max(acc, std::fabs(p[i] - q[i]));
      return acc;
    case Metric::kManhattan:
      for (std::size_t i = 0; i < d; ++i) acc += std::fabs(p[i] - q[i]);
      return acc;
  }
  return acc;
}

bool Box::contains(const Point& p, double slack) const {
  require_same_dimension(p, lo);
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (p[i] < lo[i] - slack || p[i] > hi[i] + slack) return false;
  }
  return true;
}

Point Box::clamp(const Point& p) const {
  require_same_dimension(p, lo);
  std::vector<double> c(p.coords().begin(), p.coords().end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::clamp(c[i], lo[i], hi[i]);
  return Point(std::move(c));
}

double dist_to_box(const Point& p, const Box& box, Metric m) {
  return dist(p, box.clamp(p), m);
}

SampledSet::SampledSet(std::vector<Point> points, double resolution)
    : points_(std::move(points)), resolution_(resolution) {
  if (!(resolution_ > 0.0) || !std::isfinite(resolution_)) {
    throw InputError("sampled set resolution must be positive");
  }
  if (points_.empty()) return;
  const std::size_t d = points_.front().dimension();
  std::vector<const Point*> order;
  order.reserve(points_.size());
  for (const Point& p : points_) {
    if (p.dimension() != d) throw InputError("sampled set mixes point dimensions");
    order.push_back(&p);
  }
  std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (*order[i] == *order[i - 1]) {
      throw InputError("sampled set has duplicate point " + to_string(*order[i]));
    }
  }
}

SampledSet SampledSet::deduplicated(std::vector<Point> points, double resolution) {
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  std::vector<bool> keep(points.size(), true);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (points[idx[i]] == points[idx[i - 1]]) keep[idx[i]] = false;
  }
  std::vector<Point> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) out.push_back(std::move(points[i]));
  }
  return SampledSet(std::move(out), resolution);
}

bool SampledSet::contains(const Point& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

double dist_to_set(const Point& p, std::span<const Point> s, Metric m) {
  if (s.empty()) throw InputError("distance to an empty set is undefined");
  double best = std::numeric_limits<double>::infinity();
  for (const Point& q : s) best = std::min(best, dist(p, q, m));
  return best;
}

double dist_to_set(const Point& p, const SampledSet& s, Metric m) {
  return dist_to_set(p, std::span<const Point>(s.points()), m);
}

SampledSet ball_filter(const SampledSet& s, const Point& center, double r, bool closed,
                       Metric m) {
  if (!(r > 0.0)) throw InputError("ball radius must be positive");
  std::vector<Point> out;
  for (const Point& q : s.points()) {
    const double d = dist(q, center, m);
    if (closed ? d <= r : d < r) out.push_back(q);
  }
  return SampledSet(std::move(out), s.resolution());
}

double directed_hausdorff(std::span<const Point> a, std::span<const Point> b, Metric m) {
  if (a.empty() || b.empty()) throw InputError("Hausdorff distance needs nonempty sets");
  double worst = 0.0;
  for (const Point& p : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : b) {
      best = std::min(best, dist(p, q, m));
      if (best <= worst) break;  // cannot raise the running sup
    }
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff(std::span<const Point> a, std::span<const Point> b, Metric m) {
  return std::max(directed_hausdorff(a, b, m), directed_hausdorff(b, a, m));
}

double hausdorff(const SampledSet& a, const SampledSet& b, Metric m) {
  return hausdorff(std::span<const Point>(a.points()), std::span<const Point>(b.points()), m);
}

double diameter(std::span<const Point> a, Metric m) {
  if (a.empty()) throw InputError("diameter of an empty set is undefined");
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) best = std::max(best, dist(a[i], a[j], m));
  }
  return best;
}

double diameter(const SampledSet& a, Metric m) {
  return diameter(std::span<const Point>(a.points()), m);
}

std::vector<Point> box_lattice(const Box& box, double step) {
  if (!(step > 0.0)) throw InputError("lattice step must be positive");
  const std::size_t d = box.dimension();
  std::vector<std::vector<double>> axes(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double extent = box.hi[i] - box.lo[i];
    if (extent < 0.0) throw InputError("box has hi < lo");
    const auto intervals =
        static_cast<std::size_t>(std::max(0.0, std::ceil(extent / step - 1e-9)));
    if (intervals == 0) {
      axes[i].push_back(box.lo[i]);
      continue;
    }
    for (std::size_t k = 0; k <= intervals; ++k) {
      axes[i].push_back(k == intervals ? box.hi[i]
                                       : box.lo[i] + extent * static_cast<double>(k) /
                                                         static_cast<double>(intervals));
    }
  }
  std::vector<Point> out;
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> c(d);
  while (true) {
    for (std::size_t i = 0; i < d; ++i) c[i] = axes[i][idx[i]];
    out.emplace_back(c);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (d == 0) return out;
  }
}

}  // namespace cluster_forge

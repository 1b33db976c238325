#include "cluster_forge/nets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace cluster_forge {

namespace {

std::string describe_leftover(const std::vector<Point>& leftover, std::size_t schedule_length) {
  std::string listed;
  const std::size_t shown = std::min<std::size_t>(leftover.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) listed += ", ";
    listed += to_string(leftover[i]);
  }
  if (leftover.size() > shown) listed += fmt::format(", ... ({} more)", leftover.size() - shown);
  return fmt::format("schedule of {} terms left {} point(s) unassigned: {}", schedule_length,
                     leftover.size(), listed);
}

void check_schedule(std::span<const double> eps) {
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || !std::isfinite(eps[i])) {
      throw InputError("separation schedule entries must be positive and finite");
    }
    if (i > 0 && !(eps[i] < eps[i - 1])) {
      throw InputError("separation schedule must be strictly decreasing");
    }
  }
}

}  // namespace

InsufficientDepthError::InsufficientDepthError(std::vector<Point> leftover,
                                               std::size_t schedule_length)
    : ConstructionError(ConstructionFailure::kInsufficientDepth,
                        describe_leftover(leftover, schedule_length)),
      leftover_(std::move(leftover)) {}

SampledSet greedy_separated_net(const SampledSet& s, double eps, Metric m) {
  if (!(eps > 0.0)) throw InputError("net scale must be positive");
  std::vector<Point> net;
  for (const Point& p : s.points()) {
    bool separated = true;
    for (const Point& q : net) {
      if (dist(p, q, m) < eps) {
        separated = false;
        break;
      }
    }
    if (separated) net.push_back(p);
  }
  return SampledSet(std::move(net), s.resolution());
}

std::vector<SampledSet> sigma_discrete_dense(const SampledSet& s, int depth, Metric m) {
  if (depth < 1) throw InputError("depth must be at least 1");
  std::vector<SampledSet> out;
  out.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n) out.push_back(greedy_separated_net(s, 1.0 / n, m));
  return out;
}

SampledSet greedy_permutation(const SampledSet& s, Metric m) {
  const std::size_t n = s.size();
  if (n < 2) return s;
  std::vector<Point> out;
  out.reserve(n);
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::vector<bool> taken(n, false);
  std::size_t next = 0;
  for (std::size_t round = 0; round < n; ++round) {
    taken[next] = true;
    out.push_back(s[next]);
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      gap[i] = std::min(gap[i], dist(s[i], s[next], m));
      if (best == n || gap[i] > gap[best]) best = i;
    }
    next = best;
  }
  return SampledSet(std::move(out), s.resolution());
}

SeparatedLayers separated_layers(const SampledSet& s, std::span<const double> eps_schedule,
                                 Metric m) {
  check_schedule(eps_schedule);
  SeparatedLayers out;
  out.parts.reserve(eps_schedule.size());
  std::vector<Point> remaining = s.points();
  for (double eps : eps_schedule) {
    if (remaining.empty()) {
      out.parts.emplace_back(std::vector<Point>{}, s.resolution());
      continue;
    }
    std::vector<Point> layer;
    std::vector<Point> rest;
    for (Point& p : remaining) {
      bool separated = true;
      for (const Point& q : layer) {
        if (dist(p, q, m) < eps) {
          separated = false;
          break;
        }
      }
      (separated ? layer : rest).push_back(std::move(p));
    }
    out.parts.emplace_back(std::move(layer), s.resolution());
    remaining = std::move(rest);
  }
  out.leftover = std::move(remaining);
  return out;
}

std::vector<SampledSet> decompose_separated(const SampledSet& s,
                                            std::span<const double> eps_schedule, Metric m) {
  SeparatedLayers layers = separated_layers(s, eps_schedule, m);
  if (!layers.leftover.empty()) {
    throw InsufficientDepthError(std::move(layers.leftover), eps_schedule.size());
  }
  return std::move(layers.parts);
}

std::vector<double> harmonic_schedule(double c, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t n = 1; n <= count; ++n) out[n - 1] = c / static_cast<double>(n);
  return out;
}

}  // namespace cluster_forge

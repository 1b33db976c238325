#include "cluster_forge/verify.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/parallel.hpp"

namespace cluster_forge {

ToleranceBreakdown default_tolerance(int n_max, double value_resolution, double delta_min) {
  return {2.0 / n_max, 2.0 * value_resolution, delta_min, std::nullopt};
}

VerifyReport verify_cluster_match(const FunctionSample& f, const MultifunctionTable& phi,
                                  std::span<const Point> probes,
                                  std::span<const double> delta_schedule, double tol,
                                  MatchMode mode, Metric m) {
  if (delta_schedule.empty()) throw InputError("delta schedule is empty");
  if (!(tol >= 0.0)) throw InputError("tolerance must be nonnegative");
  for (std::size_t i = 1; i < delta_schedule.size(); ++i) {
    if (!(delta_schedule[i] < delta_schedule[i - 1])) {
      throw InputError("delta schedule must be strictly decreasing");
    }
  }
  VerifyReport report;
  report.mode = mode;
  report.deltas.assign(delta_schedule.begin(), delta_schedule.end());
  report.tol = tol;
  report.per_probe.resize(probes.size());

  parallel_for(probes.size(), [&](std::size_t i) {
    ProbeResult& r = report.per_probe[i];
    r.probe = probes[i];
    const SampledSet& target = phi.at(probes[i], m);
    for (double delta : delta_schedule) {
      const std::vector<Point> values = f.values_in_ball(probes[i], delta, m);
      if (values.empty()) {
        r.error = DomainGapError(probes[i], delta).what();
        break;
      }
      const double d = mode == MatchMode::kEquality
                           ? hausdorff(std::span<const Point>(values), target.points(), m)
                           : directed_hausdorff(values, target.points(), m);
      r.distance_per_delta.push_back(d);
    }
    const auto& dd = r.distance_per_delta;
    for (std::size_t j = dd.size() >= 3 ? dd.size() - 2 : 1; j < dd.size(); ++j) {
      if (dd[j] > dd[j - 1]) r.trend_nonincreasing = false;
    }
    if (!r.error) {
      r.distance = dd.back();
      r.pass = r.distance <= tol;
    }
  });

  report.pass = !report.per_probe.empty();
  for (std::size_t i = 0; i < report.per_probe.size(); ++i) {
    const ProbeResult& r = report.per_probe[i];
    if (!r.pass) report.pass = false;
    if (!r.error && (!report.worst || r.distance > report.per_probe[*report.worst].distance)) {
      report.worst = i;
    }
  }
  return report;
}

std::vector<Point> provenance_anchors(const FunctionSample& f) {
  const bool has_thm1 = std::any_of(f.pairs().begin(), f.pairs().end(), [](const auto& p) {
    return p.provenance && p.provenance->source == Source::kTheorem1;
  });
  std::vector<Point> out;
  std::set<Point> seen;
  for (const auto& p : f.pairs()) {
    if (!p.provenance || (has_thm1 && p.provenance->source != Source::kTheorem1)) continue;
    if (seen.insert(p.provenance->anchor).second) out.push_back(p.provenance->anchor);
  }
  return out;
}

std::vector<Point> evenly_spaced(const std::vector<Point>& points,
                                 std::optional<std::size_t> count) {
  if (!count || *count >= points.size()) return points;
  std::vector<Point> out;
  out.reserve(*count);
  for (std::size_t i = 0; i < *count; ++i) out.push_back(points[i * points.size() / *count]);
  return out;
}

std::vector<Point> select_probes(const Scene& scene, const FunctionSample& f, ProbeSet set,
                                 std::optional<std::size_t> count) {
  std::vector<Point> base;
  if (set == ProbeSet::kKeys) {
    base = scene.phi.keys();
  } else {
    base = provenance_anchors(f);
    std::sort(base.begin(), base.end());
  }
  return evenly_spaced(base, count);
}

}  // namespace cluster_forge

#include "cluster_forge/scene.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

std::string_view to_string(MatchMode m) {
  return m == MatchMode::kEquality ? "equality" : "containment";
}

MatchMode match_mode_from_string(std::string_view name) {
  if (name == "equality") return MatchMode::kEquality;
  if (name == "containment") return MatchMode::kContainment;
  throw InputError(fmt::format("unknown match mode '{}'", name));
}

double Scene::delta_min() const {
  if (verify.delta_min) return *verify.delta_min;
  return std::ldexp(0.2 * x_box.diameter(metric), -(verify.steps - 1));
}

std::vector<double> Scene::delta_schedule() const {
  return geometric_schedule(delta_min(), verify.steps);
}

std::optional<Point> interior_witness(const SetOracle& boundary, const Box& x_box,
                                      double spacing) {
  const std::size_t d = x_box.dimension();
  for (const Point& p : box_lattice(x_box, spacing)) {
    if (boundary.distance(p) > 0.0) continue;
    bool escaped = false;
    for (std::size_t i = 0; i < d && !escaped; ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> c(p.coords().begin(), p.coords().end());
        c[i] += sign * 0.5 * spacing;
        Point q(std::move(c));
        if (x_box.contains(q) && boundary.distance(q) > 0.0) {
          escaped = true;
          break;
        }
      }
    }
    if (!escaped) return p;
  }
  return std::nullopt;
}

SceneDiagnostics validate_scene(const Scene& scene) {
  SceneDiagnostics diag;
  auto error = [&](const std::string& field, const std::string& msg) {
    diag.errors.push_back(field + ": " + msg);
  };
  const Metric m = scene.metric;
  const std::size_t d = scene.dimension;

  if (scene.x_box.dimension() != d) error("x_box", "dimension differs from scene dimension");
  const SampledSet& l_sample = scene.boundary.sample();
  if (l_sample.empty()) {
    error("L", "boundary sample is empty");
  } else if (l_sample.dimension() != d) {
    error("L", "boundary sample dimension differs from scene dimension");
  }
  if (scene.depths.n_max < 1 || scene.depths.k_max < 1 || scene.depths.K < 1) {
    error("depths", "n_max, k_max and K must be positive");
  }
  if (scene.phi.size() == 0) error("phi", "multifunction table has no entries");
  for (std::size_t i = 0; i < scene.phi.size(); ++i) {
    if (!l_sample.contains(scene.phi.keys()[i])) {
      error(fmt::format("phi/entries/{}/key", i),
            "key " + to_string(scene.phi.keys()[i]) + " is not a point of the L sample");
    }
  }
  if (scene.y_dense.dimension() != scene.phi.value_space().dimension()) {
    error("value_space", "dense value grid and value space differ in dimension");
  }
  if (!diag.errors.empty()) return diag;

  if (scene.domain) {
    const SampledSet& dom = *scene.domain;
    if (dom.empty()) error("D", "explicit domain sample is empty");
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const Point& x = dom[i];
      if (x.dimension() != d) {
        error(fmt::format("D/{}", i), "dimension differs from scene dimension");
        break;
      }
      if (!(scene.boundary.distance(x) > 0.0) || l_sample.contains(x)) {
        error(fmt::format("D/{}", i), "point " + to_string(x) + " overlaps L");
        break;
      }
    }
    if (diag.errors.empty()) {
      for (const Point& a : l_sample.points()) {
        const double gap = dist_to_set(a, dom, m);
        if (gap > dom.resolution()) {
          error("D", fmt::format("L point {} is {:.6g} from D, beyond D resolution {:.6g}",
                                 to_string(a), gap, dom.resolution()));
          break;
        }
      }
    }
  }

  if (auto w = interior_witness(scene.boundary, scene.x_box, scene.x_resolution)) {
    diag.nowhere_dense = false;
    error("L", "L has interior near " + to_string(*w) + " at probe spacing " +
                   fmt::format("{:.6g}", scene.x_resolution));
  }

  diag.usc = usc_check(scene.phi, scene.usc.delta, scene.usc.eps, m);
  if (!diag.usc.pass) {
    const auto& w = *diag.usc.witness;
    error("phi", fmt::format("usc_check failed at (delta={:.6g}, eps={:.6g}): keys {} and {} "
                             "(distance {:.6g}); value {} is {:.6g} from Phi({})",
                             scene.usc.delta, scene.usc.eps, to_string(scene.phi.keys()[w.key]),
                             to_string(scene.phi.keys()[w.near_key]),
                             dist(scene.phi.keys()[w.key], scene.phi.keys()[w.near_key], m),
                             to_string(w.value), w.gap, to_string(scene.phi.keys()[w.key])));
  }
  diag.modulus_ladder = usc_modulus_ladder(scene.phi, scene.usc.delta, 2, 3, m);

  const double r_last = std::ldexp(1.0, -scene.depths.k_max);
  if (!scene.domain && scene.delta_min() <= r_last) {
    diag.warnings.push_back(fmt::format(
        "smallest verification delta {:.6g} does not exceed r_kmax = {:.6g}; probes will see "
        "few constructed points",
        scene.delta_min(), r_last));
  }
  return diag;
}

void require_valid(const Scene& scene) {
  SceneDiagnostics diag = validate_scene(scene);
  if (!diag.valid()) {
    const std::string& first = diag.errors.front();
    const auto colon = first.find(": ");
    throw SceneError(first.substr(0, colon), first.substr(colon + 2));
  }
}

}  // namespace cluster_forge

#include "cluster_forge/construct.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <set>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/parallel.hpp"

namespace cluster_forge {

namespace {

using Registry = std::set<Point>;
using Placer = std::function<std::vector<Point>(const Point& s, int layer, const Registry& used)>;

ConstructionError too_sparse(const Point& s, int layer, const std::string& why) {
  return ConstructionError(ConstructionFailure::kDomainTooSparse,
                           fmt::format("domain too sparse near s = {} (layer {}): {}",
                                       to_string(s), layer, why));
}

std::vector<std::vector<double>> lattice_directions(std::size_t d, Metric m) {
  std::vector<std::vector<double>> out;
  std::vector<int> digits(d, -1);
  while (true) {
    if (std::any_of(digits.begin(), digits.end(), [](int v) { return v != 0; })) {
      std::vector<double> u(digits.begin(), digits.end());
      const double len = norm(u, m);
      for (double& c : u) c /= len;
      out.push_back(std::move(u));
    }
    std::size_t i = d;
    bool done = true;
    while (i > 0) {
      --i;
      if (++digits[i] <= 1) {
        done = false;
        break;
      }
      digits[i] = -1;
    }
    if (done) break;
  }
  // Axis directions first so ties prefer them.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto nz = [](const std::vector<double>& u) {
      return std::count_if(u.begin(), u.end(), [](double c) { return c != 0.0; });
    };
    return nz(a) < nz(b);
  });
  return out;
}

Placer free_placer(const Scene& scene) {
  auto dirs = std::make_shared<std::vector<std::vector<double>>>(
      lattice_directions(scene.dimension, scene.metric));
  return [&scene, dirs](const Point& s, int layer, const Registry& used) {
    const Metric m = scene.metric;
    std::vector<Point> xs;
    double prev = 1.0 / layer;
    for (int k = 1; k <= scene.depths.k_max; ++k) {
      const double r = placement_radius(layer, k);
      std::optional<Point> best;
      double best_gap = -1.0;
      for (const auto& u : *dirs) {
        std::vector<double> c(s.coords().begin(), s.coords().end());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += r * u[i];
        Point x(std::move(c));
        if (!scene.x_box.contains(x)) continue;
        const double gap = scene.boundary.distance(x);
        if (!(gap > 0.0) || !(dist(x, s, m) < prev) || used.contains(x)) continue;
        if (gap > best_gap) {
          best_gap = gap;
          best = std::move(x);
        }
      }
      if (!best) {
        throw too_sparse(s, layer,
                         fmt::format("no admissible point at radius r_{} = {:.6g}", k, r));
      }
      prev = dist(*best, s, m);
      xs.push_back(std::move(*best));
    }
    return xs;
  };
}

struct Candidate {
  std::size_t index;  // position in D
  double d;           // distance to s
  double gap;         // distance to L
  std::size_t group;
};

Placer explicit_placer(const Scene& scene, const SampledSet& domain) {
  return [&scene, &domain](const Point& s, int layer, const Registry& used) {
    const Metric m = scene.metric;
    const int k_max = scene.depths.k_max;
    const double reach = 1.0 / layer;
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const double d = dist(domain[i], s, m);
      if (d < reach && !used.contains(domain[i])) {
        cands.push_back({i, d, scene.boundary.distance(domain[i]), 0});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
      return a.d != b.d ? a.d < b.d : a.index < b.index;
    });
    // Distance shells, nearest first; values within 1e-12 relative share a shell.
    std::size_t groups = 0;
    double shell = -1.0;
    for (auto& c : cands) {
      if (groups == 0 || c.d > shell * (1.0 + 1e-12)) {
        shell = c.d;
        ++groups;
      }
      c.group = groups - 1;
    }
    if (groups < static_cast<std::size_t>(k_max)) {
      throw too_sparse(s, layer,
                       fmt::format("D offers {} distinct distances below 1/{}, need k_max = {}",
                                   groups, layer, k_max));
    }
    auto better = [](const Candidate& a, const Candidate& b) {
      if (a.gap != b.gap) return a.gap > b.gap;
      if (a.d != b.d) return a.d > b.d;
      return a.index < b.index;
    };
    std::vector<Point> xs;
    std::size_t prev = groups;
    for (int k = 1; k <= k_max; ++k) {
      const std::size_t lower = static_cast<std::size_t>(k_max - k);
      const double r = placement_radius(layer, k);
      const Candidate* pick = nullptr;
      for (const auto& c : cands) {
        if (c.group < lower || c.group >= prev || c.d > r) continue;
        if (!pick || better(c, *pick)) pick = &c;
      }
      if (!pick) {
        for (const auto& c : cands) {
          if (c.group != lower) continue;
          if (!pick || better(c, *pick)) pick = &c;
        }
      }
      prev = pick->group;
      xs.push_back(domain[pick->index]);
    }
    return xs;
  };
}

Theorem1Result run_theorem1(const Scene& scene, const Placer& place) {
  const Metric m = scene.metric;
  Theorem1Result out;
  SeparatedLayers layers = anchor_layers(scene);
  out.layers = std::move(layers.parts);
  out.unassigned = std::move(layers.leftover);

  Registry used;
  std::vector<FunctionPair> pairs;
  for (std::size_t li = 0; li < out.layers.size(); ++li) {
    const int n = static_cast<int>(li) + 1;
    const SampledSet& part = out.layers[li];
    std::vector<AnchorFamily> fams(part.size());
    parallel_for(part.size(), [&](std::size_t a) {
      const Point& s = part[a];
      AnchorFamily fam;
      fam.layer = n;
      fam.anchor = s;
      fam.xs = place(s, n, used);
      const LimitSequence seq = anchor_value_sequence(scene, scene.phi.at(s, m), n);
      for (int k = 1; k <= scene.depths.k_max; ++k) fam.ys.push_back(sequence_value(seq, k));
      fams[a] = std::move(fam);
    });
    for (auto& fam : fams) {
      for (std::size_t k = 0; k < fam.xs.size(); ++k) {
        if (!used.insert(fam.xs[k]).second) {
          throw too_sparse(fam.anchor, n,
                           fmt::format("point {} already taken by another family",
                                       to_string(fam.xs[k])));
        }
        pairs.push_back({fam.xs[k], fam.ys[k],
                         Provenance{n, fam.anchor, static_cast<int>(k) + 1, Source::kTheorem1}});
      }
      out.families.push_back(std::move(fam));
    }
  }
  out.f = FunctionSample(std::move(pairs));
  return out;
}

}  // namespace

std::vector<Point> Theorem1Result::domain() const {
  std::vector<Point> out;
  for (const auto& fam : families) out.insert(out.end(), fam.xs.begin(), fam.xs.end());
  return out;
}

SeparatedLayers anchor_layers(const Scene& scene) {
  const auto schedule = harmonic_schedule(3.0, static_cast<std::size_t>(scene.depths.n_max));
  return separated_layers(scene.boundary.sample(), schedule,
                          scene.metric);
}

double placement_radius(int layer, int k) { return std::ldexp(1.0 / layer, -k); }

LimitSequence anchor_value_sequence(const Scene& scene, const SampledSet& phi_s, int layer) {
  const SampledSet y_s = scene.y_dense.base_points_near(phi_s, 1.0 / layer, scene.metric);
  if (y_s.empty()) {
    throw ConstructionError(ConstructionFailure::kValueGridTooCoarse,
                            fmt::format("no value-grid point within 1/{} of Phi(s); value grid "
                                        "step {:.6g} must be refined",
                                        layer, scene.y_dense.step()));
  }
  try {
    return limit_point_sequence(y_s, phi_s, scene.depths.K, scene.metric);
  } catch (const InputError& e) {
    throw ConstructionError(ConstructionFailure::kValueGridTooCoarse, e.what());
  }
}

const Point& sequence_value(const LimitSequence& seq, int k) {
  const std::size_t idx = static_cast<std::size_t>(k - 1);
  if (idx < seq.points.size()) return seq.points[idx];
  const auto last = seq.block(seq.blocks());
  return last[(idx - seq.points.size()) % last.size()];
}

FunctionSample lemma1_on(std::span<const Point> domain, const SetOracle& boundary,
                         const MultifunctionTable& phi, const ValueGrid& y_dense, Metric m) {
  const SampledSet& l_sample = boundary.sample();
  if (l_sample.empty()) throw InputError("boundary sample is empty");
  std::vector<FunctionPair> pairs(domain.size());
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (domain.size() + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t end = std::min(domain.size(), (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) {
      const Point& x = domain[i];
      const double r = boundary.distance(x);
      if (!(r > 0.0)) {
        throw ConstructionError(ConstructionFailure::kSceneInvariant,
                                "domain point " + to_string(x) + " lies on L");
      }
      std::size_t h = 0;
      double hd = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < l_sample.size(); ++j) {
        const double d = dist(x, l_sample[j], m);
        if (d < hd) {
          hd = d;
          h = j;
        }
      }
      if (!(hd < 2.0 * r)) {
        throw ConstructionError(
            ConstructionFailure::kResolutionTooCoarse,
            fmt::format("nearest L sample point to {} is {:.6g} away, not below 2 r(x) = {:.6g}; "
                        "refine the L sample",
                        to_string(x), hd, 2.0 * r));
      }
      const Point& target = phi.at(l_sample[h], m)[0];
      auto y = y_dense.snap_within(target, r, m);
      if (!y) {
        throw ConstructionError(
            ConstructionFailure::kValueGridTooCoarse,
            fmt::format("no value-grid point within r(x) = {:.6g} of {}; need a grid step "
                        "below {:.6g}",
                        r, to_string(target), std::ldexp(r, ValueGrid::kMaxLevel)));
      }
      pairs[i] = {x, std::move(*y), Provenance{0, l_sample[h], 0, Source::kLemma1}};
    }
  });
  return FunctionSample(std::move(pairs));
}

FunctionSample construct_lemma1(const Scene& scene) {
  if (!scene.domain) throw InputError("Lemma 1 construction needs an explicit domain D");
  return lemma1_on(scene.domain->points(), scene.boundary, scene.phi, scene.y_dense,
                   scene.metric);
}

Theorem1Result construct_theorem1(const Scene& scene) {
  return run_theorem1(scene, free_placer(scene));
}

Theorem1Result construct_theorem1_in(const Scene& scene, const SampledSet& domain) {
  return run_theorem1(scene, explicit_placer(scene, domain));
}

BoundaryPart remainder_boundary(const Scene& scene, std::span<const Point> remainder) {
  const SampledSet& l_sample = scene.boundary.sample();
  const double reach = scene.domain ? scene.domain->resolution() : scene.x_resolution;
  std::vector<Point> l2;
  if (!remainder.empty()) {
    for (const Point& a : l_sample.points()) {
      if (dist_to_set(a, remainder, scene.metric) <= reach) l2.push_back(a);
    }
  }
  if (l2.empty()) return {SampledSet(), scene.boundary, scene.phi};
  const std::set<Point> keep(l2.begin(), l2.end());
  MultifunctionTable phi2 =
      scene.phi.restricted([&](std::size_t i) { return keep.contains(scene.phi.keys()[i]); });
  if (phi2.size() == 0) phi2 = scene.phi;
  SampledSet sample(std::move(l2), l_sample.resolution());
  SetOracle boundary = scene.boundary.restricted_to(sample);
  return {std::move(sample), std::move(boundary), std::move(phi2)};
}

Theorem2Result construct_theorem2(const Scene& scene) {
  if (!scene.domain) throw InputError("Theorem 2 construction needs an explicit domain D");
  const SampledSet& dom = *scene.domain;
  Theorem2Result out;
  out.first = construct_theorem1_in(scene, dom);

  const std::vector<Point> d1 = out.first.domain();
  const std::set<Point> taken(d1.begin(), d1.end());
  for (const Point& x : dom.points()) {
    if (!taken.contains(x)) out.remainder.push_back(x);
  }

  std::vector<FunctionPair> pairs = out.first.f.pairs();
  if (!out.remainder.empty()) {
    BoundaryPart part = remainder_boundary(scene, out.remainder);
    out.boundary_part = std::move(part.sample);
    out.second = lemma1_on(out.remainder, part.boundary, part.phi, scene.y_dense, scene.metric);
    pairs.insert(pairs.end(), out.second.pairs().begin(), out.second.pairs().end());
  }
  out.f = FunctionSample(std::move(pairs));
  return out;
}

}  // namespace cluster_forge

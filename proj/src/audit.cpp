#include "cluster_forge/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>

#include "cluster_forge/construct.hpp"

namespace cluster_forge {

namespace {

class Check {
 public:
  explicit Check(std::string name) { c_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++c_.checked;
    if (!ok && c_.pass) {
      c_.pass = false;
      c_.first_failure = describe();
    }
  }
  AuditCheck done() { return std::move(c_); }

 private:
  AuditCheck c_;
};

struct Family {
  int layer;
  Point anchor;
  std::vector<std::pair<int, std::size_t>> members;  // (k, pair index)
};

}  // namespace

bool AuditReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

const AuditCheck* AuditReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AuditReport audit_construction(const Scene& scene, const FunctionSample& f) {
  const Metric m = scene.metric;
  const auto& pairs = f.pairs();
  const SampledSet& l_sample = scene.boundary.sample();

  std::map<std::pair<int, Point>, Family> families;
  std::vector<std::size_t> lemma1;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& prov = pairs[i].provenance;
    if (!prov) continue;
    if (prov->source == Source::kLemma1) {
      lemma1.push_back(i);
      continue;
    }
    auto key = std::make_pair(prov->layer, prov->anchor);
    auto it = families.try_emplace(key, Family{prov->layer, prov->anchor, {}}).first;
    it->second.members.emplace_back(prov->k, i);
  }
  for (auto& [key, fam] : families) std::sort(fam.members.begin(), fam.members.end());

  AuditReport report;
  if (!families.empty()) {
    Check c1("cond1"), c2("cond2"), c3("cond3"), c4("cond4"), c5("cond5"), c6("cond6"),
        c7("cond7"), layers("layers"), closure("a_closure");
    const double n_max = scene.depths.n_max;
    const double tail_bound = 4.0 / scene.depths.K;

    std::map<int, std::vector<Point>> anchors_by_layer;
    std::set<Point> seen_x;
    for (const auto& [key, fam] : families) {
      const int n = fam.layer;
      const Point& s = fam.anchor;
      const SampledSet& phi_s = scene.phi.at(s, m);
      anchors_by_layer[n].push_back(s);
      layers.expect(n >= 1 && l_sample.contains(s),
                    [&] { return fmt::format("anchor {} of layer {} is not on L", to_string(s), n); });

      double prev = std::numeric_limits<double>::infinity();
      double nearest = std::numeric_limits<double>::infinity();
      std::vector<Point> tail;
      const int k_max = static_cast<int>(fam.members.size());
      for (std::size_t j = 0; j < fam.members.size(); ++j) {
        const auto [k, idx] = fam.members[j];
        const Point& x = pairs[idx].x;
        const Point& y = pairs[idx].y;
        const double gap = scene.boundary.distance(x);
        const double dxs = dist(x, s, m);
        c1.expect(gap > 0.0 && !l_sample.contains(x),
                  [&] { return fmt::format("x = {} lies on L", to_string(x)); });
        c2.expect(dxs < 1.0 / n, [&] {
          return fmt::format("dist({}, s = {}) = {:.17g} is not below 1/{}", to_string(x),
                             to_string(s), dxs, n);
        });
        c3.expect(k == static_cast<int>(j) + 1 && dxs < prev, [&] {
          return fmt::format("family of s = {} breaks at k = {} (distance {:.17g}, previous "
                             "{:.17g})",
                             to_string(s), k, dxs, prev);
        });
        c4.expect(seen_x.insert(x).second,
                  [&] { return fmt::format("domain point {} repeats", to_string(x)); });
        c5.expect(scene.y_dense.contains(y),
                  [&] { return fmt::format("value {} is not a point of Y", to_string(y)); });
        const double dy = dist_to_set(y, phi_s, m);
        c7.expect(dy < 1.0 / n, [&] {
          return fmt::format("value {} at s = {} is {:.17g} from Phi(s), not below 1/{}",
                             to_string(y), to_string(s), dy, n);
        });
        closure.expect(gap <= 1.0 / n, [&] {
          return fmt::format("x = {} of layer {} is {:.17g} from L", to_string(x), n, gap);
        });
        prev = dxs;
        nearest = std::min(nearest, dxs);
        if (2 * k >= k_max) tail.push_back(y);
      }
      closure.expect(nearest < 1.0 / n_max, [&] {
        return fmt::format("family of s = {} stays {:.17g} away from s", to_string(s), nearest);
      });
      const double h = hausdorff(std::span<const Point>(tail), phi_s.points(), m);
      c6.expect(h <= tail_bound, [&] {
        return fmt::format("tail of s = {} is {:.17g} from Phi(s) in Hausdorff distance, above "
                           "{:.17g}",
                           to_string(s), h, tail_bound);
      });
    }
    for (const auto& [n, anchors] : anchors_by_layer) {
      for (std::size_t i = 0; i < anchors.size(); ++i) {
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
          const double d = dist(anchors[i], anchors[j], m);
          layers.expect(d >= 3.0 / n, [&] {
            return fmt::format("anchors {} and {} of layer {} are {:.17g} apart",
                               to_string(anchors[i]), to_string(anchors[j]), n, d);
          });
        }
      }
    }
    for (Check* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &layers, &closure}) {
      report.checks.push_back(c->done());
    }
  }

  if (!lemma1.empty()) {
    Check radius("lemma1_radius"), value("lemma1_value");
    std::vector<Point> remainder;
    for (std::size_t i : lemma1) remainder.push_back(pairs[i].x);
    const bool split = !families.empty();
    const BoundaryPart part =
        split ? remainder_boundary(scene, remainder)
              : BoundaryPart{SampledSet(), scene.boundary, scene.phi};
    for (std::size_t i : lemma1) {
      const Point& x = pairs[i].x;
      const Point& y = pairs[i].y;
      const Point& h = pairs[i].provenance->anchor;
      const double r = part.boundary.distance(x);
      const double dh = dist(x, h, m);
      radius.expect(r > 0.0 && part.boundary.sample().contains(h) && dh < 2.0 * r, [&] {
        return fmt::format("x = {}: r(x) = {:.17g}, h(x) = {} at distance {:.17g}", to_string(x),
                           r, to_string(h), dh);
      });
      const double dy = dist_to_set(y, part.phi.at(h, m), m);
      value.expect(dy < r && scene.y_dense.contains(y), [&] {
        return fmt::format("f({}) = {} is {:.17g} from Phi(h(x)), r(x) = {:.17g}", to_string(x),
                           to_string(y), dy, r);
      });
    }
    report.checks.push_back(radius.done());
    report.checks.push_back(value.done());

    if (split) {
      Check partition("partition");
      if (!scene.domain) {
        partition.expect(false, [] { return std::string("scene has no explicit D"); });
      } else {
        const SampledSet& dom = *scene.domain;
        std::set<Point> xs;
        for (const auto& p : pairs) xs.insert(p.x);
        partition.expect(xs.size() == dom.size(), [&] {
          return fmt::format("dom f has {} points, D has {}", xs.size(), dom.size());
        });
        for (const Point& x : dom.points()) {
          partition.expect(xs.contains(x),
                           [&] { return fmt::format("D point {} missing from dom f", to_string(x)); });
        }
      }
      report.checks.push_back(partition.done());
    }
  }
  return report;
}

}  // namespace cluster_forge

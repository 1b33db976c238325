#include "cluster_forge/multifunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

MultifunctionTable::MultifunctionTable(std::vector<Point> keys, std::vector<SampledSet> values,
                                       Box value_space, double value_resolution)
    : keys_(std::move(keys)),
      values_(std::move(values)),
      value_space_(std::move(value_space)),
      value_resolution_(value_resolution) {
  if (keys_.size() != values_.size()) throw InputError("table keys and values differ in count");
  if (!(value_resolution_ > 0.0)) throw InputError("value resolution must be positive");
  SampledSet(keys_, 1.0);  // rejects duplicate keys
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].empty()) {
      throw InputError("value set at key " + to_string(keys_[i]) + " is empty");
    }
    for (const Point& y : values_[i].points()) {
      if (y.dimension() != value_space_.dimension() || !value_space_.contains(y, 1e-12)) {
        throw InputError("value " + to_string(y) + " at key " + to_string(keys_[i]) +
                         " lies outside the value space");
      }
    }
  }
}

std::size_t MultifunctionTable::nearest_key(const Point& x, Metric m) const {
  if (keys_.empty()) throw InputError("multifunction table has no keys");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    const double d = dist(x, keys_[i], m);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::optional<std::size_t> MultifunctionTable::find_key(const Point& x) const {
  auto it = std::find(keys_.begin(), keys_.end(), x);
  if (it == keys_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::string_view to_string(Source s) {
  return s == Source::kTheorem1 ? "thm1" : "lemma1";
}

Source source_from_string(std::string_view name) {
  if (name == "thm1") return Source::kTheorem1;
  if (name == "lemma1") return Source::kLemma1;
  throw InputError(fmt::format("unknown provenance source '{}'", name));
}

FunctionSample::FunctionSample(std::vector<FunctionPair> pairs) : pairs_(std::move(pairs)) {
  std::vector<const Point*> xs;
  xs.reserve(pairs_.size());
  for (const auto& p : pairs_) xs.push_back(&p.x);
  std::sort(xs.begin(), xs.end(), [](const Point* a, const Point* b) { return *a < *b; });
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (*xs[i] == *xs[i - 1]) {
      throw InputError("function sample repeats domain point " + to_string(*xs[i]));
    }
  }
}

std::vector<Point> FunctionSample::values_in_ball(const Point& x, double delta, Metric m) const {
  std::vector<Point> out;
  for (const auto& p : pairs_) {
    if (dist(p.x, x, m) < delta) out.push_back(p.y);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UscReport usc_check(const MultifunctionTable& phi, double delta, double eps, Metric m) {
  if (!(delta > 0.0) || !(eps > 0.0)) throw InputError("usc_check needs delta, eps > 0");
  UscReport report;
  const auto& keys = phi.keys();
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (i == j || !(dist(keys[i], keys[j], m) < delta)) continue;
      for (const Point& y : phi.values()[j].points()) {
        const double gap = dist_to_set(y, phi.values()[i], m);
        if (!(gap < eps) && (!report.witness || gap > report.witness->gap)) {
          report.pass = false;
          report.witness = UscWitness{i, j, y, gap};
        }
      }
    }
  }
  return report;
}

double usc_modulus(const MultifunctionTable& phi, double delta, Metric m) {
  const auto& keys = phi.keys();
  double worst = 0.0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (i == j || !(dist(keys[i], keys[j], m) < delta)) continue;
      worst = std::max(worst, directed_hausdorff(phi.values()[j].points(),
                                                 phi.values()[i].points(), m));
    }
  }
  return worst;
}

std::vector<ModulusRow> usc_modulus_ladder(const MultifunctionTable& phi, double delta, int up,
                                           int down, Metric m) {
  std::vector<ModulusRow> rows;
  for (int j = up; j >= -down; --j) {
    const double d = std::ldexp(delta, j);
    rows.push_back({d, usc_modulus(phi, d, m)});
  }
  return rows;
}

DomainGapError::DomainGapError(const Point& x, double delta)
    : std::runtime_error(fmt::format("domain does not accumulate at {} at scale {:.17g}",
                                     to_string(x), delta)),
      delta_(delta) {}

std::vector<SampledSet> empirical_cluster_set(const FunctionSample& f, const Point& x,
                                              std::span<const double> delta_schedule,
                                              Metric m) {
  std::vector<SampledSet> out;
  out.reserve(delta_schedule.size());
  for (std::size_t i = 0; i < delta_schedule.size(); ++i) {
    const double delta = delta_schedule[i];
    if (!(delta > 0.0)) throw InputError("delta schedule entries must be positive");
    if (i > 0 && !(delta < delta_schedule[i - 1])) {
      throw InputError("delta schedule must be strictly decreasing");
    }
    std::vector<Point> values = f.values_in_ball(x, delta, m);
    if (values.empty()) throw DomainGapError(x, delta);
    out.emplace_back(std::move(values), delta);
  }
  return out;
}

double oscillation(const FunctionSample& f, const Point& x, double delta, Metric m) {
  if (!(delta > 0.0)) throw InputError("oscillation scale must be positive");
  std::vector<Point> values = f.values_in_ball(x, delta, m);
  if (values.empty()) throw DomainGapError(x, delta);
  return diameter(std::span<const Point>(values), m);
}

std::vector<double> geometric_schedule(double delta_min, int steps) {
  if (!(delta_min > 0.0) || steps < 1) throw InputError("bad delta schedule parameters");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(std::ldexp(delta_min, steps - 1 - i));
  return out;
}

}  // namespace cluster_forge

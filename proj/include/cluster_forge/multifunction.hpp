#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster_forge/metric.hpp"

namespace cluster_forge {

/// Target multifunction Phi: L -o Ybar, known at finitely many keys.
/// Off the keys it extends by nearest-key lookup.
class MultifunctionTable {
 public:
  MultifunctionTable() = default;
  MultifunctionTable(std::vector<Point> keys, std::vector<SampledSet> values, Box value_space,
                     double value_resolution);

  const std::vector<Point>& keys() const noexcept { return keys_; }
  const std::vector<SampledSet>& values() const noexcept { return values_; }
  const Box& value_space() const noexcept { return value_space_; }
  double value_resolution() const noexcept { return value_resolution_; }
  std::size_t size() const noexcept { return keys_.size(); }

  /// Index of the key nearest to `x` (lowest index on ties).
  std::size_t nearest_key(const Point& x, Metric m = Metric::kEuclidean) const;
  const SampledSet& at(const Point& x, Metric m = Metric::kEuclidean) const {
    return values_[nearest_key(x, m)];
  }
  /// Exact key lookup; nullopt when `x` is not a key.
  std::optional<std::size_t> find_key(const Point& x) const;

  /// Table restricted to the keys for which keep(i) is true.
  template <typename Pred>
  MultifunctionTable restricted(Pred keep) const {
    std::vector<Point> k;
    std::vector<SampledSet> v;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keep(i)) {
        k.push_back(keys_[i]);
        v.push_back(values_[i]);
      }
    }
    return MultifunctionTable(std::move(k), std::move(v), value_space_, value_resolution_);
  }

 private:
  std::vector<Point> keys_;
  std::vector<SampledSet> values_;
  Box value_space_;
  double value_resolution_ = 1.0;
};

enum class Source { kTheorem1, kLemma1 };

std::string_view to_string(Source s);
Source source_from_string(std::string_view name);

/// Where a constructed pair came from: layer n, anchor s, index k.
/// Lemma 1 pairs use layer 0, anchor h(x) and k = 0.
struct Provenance {
  int layer = 0;
  Point anchor;
  int k = 0;
  Source source = Source::kTheorem1;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct FunctionPair {
  Point x;
  Point y;
  std::optional<Provenance> provenance;

  friend bool operator==(const FunctionPair&, const FunctionPair&) = default;
};

/// Finite graph of f: D -> Y. Domain points are pairwise distinct.
class FunctionSample {
 public:
  FunctionSample() = default;
  explicit FunctionSample(std::vector<FunctionPair> pairs);

  const std::vector<FunctionPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Values f(z) for z in dom f with dist(z, x) < delta, deduplicated and
  /// sorted lexicographically.
  std::vector<Point> values_in_ball(const Point& x, double delta, Metric m) const;

  friend bool operator==(const FunctionSample&, const FunctionSample&) = default;

 private:
  std::vector<FunctionPair> pairs_;
};

struct UscWitness {
  std::size_t key;        // s
  std::size_t near_key;   // s', dist(s, s') < delta
  Point value;            // point of Phi(s') outside B(Phi(s), eps)
  double gap;             // dist(value, Phi(s))
};

struct UscReport {
  bool pass = true;
  std::optional<UscWitness> witness;  // worst violation when !pass
};

/// Finite-scale upper continuity: for all keys s, s' with dist(s, s') < delta,
/// Phi(s') lies in the open eps-enlargement of Phi(s).
UscReport usc_check(const MultifunctionTable& phi, double delta, double eps,
                    Metric m = Metric::kEuclidean);

/// sup of dist(Phi(s'), Phi(s)) (directed) over key pairs closer than delta;
/// usc_check(phi, delta, eps) passes iff eps > usc_modulus(phi, delta).
double usc_modulus(const MultifunctionTable& phi, double delta, Metric m = Metric::kEuclidean);

struct ModulusRow {
  double delta;
  double modulus;
};

/// usc_modulus at delta * 2^j for j in [-down, up].
std::vector<ModulusRow> usc_modulus_ladder(const MultifunctionTable& phi, double delta, int up,
                                           int down, Metric m = Metric::kEuclidean);

/// Value sets of f on the balls B(x, delta_i), one per schedule entry.
/// The schedule must be strictly decreasing; the last entry is the cluster
/// set estimate. Throws DomainGapError if some ball misses dom f.
std::vector<SampledSet> empirical_cluster_set(const FunctionSample& f, const Point& x,
                                              std::span<const double> delta_schedule,
                                              Metric m = Metric::kEuclidean);

/// Diameter of the value set of f on B(x, delta).
double oscillation(const FunctionSample& f, const Point& x, double delta,
                   Metric m = Metric::kEuclidean);

/// Raised when dom f does not accumulate at x at the given scale.
class DomainGapError : public std::runtime_error {
 public:
  DomainGapError(const Point& x, double delta);
  double delta() const noexcept { return delta_; }

 private:
  double delta_;
};

/// Schedule delta_min * 2^(steps-1-i), i = 0..steps-1.
std::vector<double> geometric_schedule(double delta_min, int steps);

}  // namespace cluster_forge

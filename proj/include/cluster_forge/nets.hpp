#pragma once

#include <span>
#include <vector>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/metric.hpp"

namespace cluster_forge {

/// Greedy maximal eps-separated subset of `s`, scanning in input order.
///
/// The result N satisfies, exactly on the sample:
///   - dist(p, q) >= eps for distinct p, q in N;
///   - every point of `s` lies at distance < eps from some point of N.
/// Maximality is what makes the second property hold, so the scan order only
/// affects which net is returned, never its certificate.
SampledSet greedy_separated_net(const SampledSet& s, double eps, Metric m = Metric::kEuclidean);

/// (A_1, ..., A_depth) with A_n a greedy (1/n)-separated (1/n)-net of `s`.
std::vector<SampledSet> sigma_discrete_dense(const SampledSet& s, int depth,
                                             Metric m = Metric::kEuclidean);

/// Farthest-point ordering of `s` starting from its first point. Each prefix
/// is spread as evenly as a greedy choice allows.
SampledSet greedy_permutation(const SampledSet& s, Metric m = Metric::kEuclidean);

struct SeparatedLayers {
  std::vector<SampledSet> parts;  // one per schedule entry, possibly empty
  std::vector<Point> leftover;    // points no part could take
};

/// Layer k is a greedy eps_k-separated net of whatever earlier layers left
/// behind, so layer k = B_k \ (B_1 u ... u B_{k-1}) with B_k separated.
/// Never throws on leftovers; see decompose_separated for the strict form.
SeparatedLayers separated_layers(const SampledSet& s, std::span<const double> eps_schedule,
                                 Metric m = Metric::kEuclidean);

/// Disjoint decomposition S = S_1 u ... u S_K with S_k eps_k-separated.
/// Throws InsufficientDepthError if the schedule runs out first.
std::vector<SampledSet> decompose_separated(const SampledSet& s,
                                            std::span<const double> eps_schedule,
                                            Metric m = Metric::kEuclidean);

/// Schedule eps_n = c / n for n = 1..count.
std::vector<double> harmonic_schedule(double c, std::size_t count);

class InsufficientDepthError : public ConstructionError {
 public:
  InsufficientDepthError(std::vector<Point> leftover, std::size_t schedule_length);

  const std::vector<Point>& leftover() const noexcept { return leftover_; }

 private:
  std::vector<Point> leftover_;
};

}  // namespace cluster_forge

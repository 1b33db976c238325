#pragma once

#include <span>
#include <vector>

#include "cluster_forge/metric.hpp"

namespace cluster_forge {

/// Finite prefix x_1, ..., x_{n_K} of a sequence in A whose limit-point set
/// is F, materialized block by block: block k is A_k n B(F, 1/k) where A_k
/// is a greedy (1/k)-net of A.
struct LimitSequence {
  std::vector<Point> points;
  /// block_end[k-1] = n_k, the index one past the last element of block k.
  std::vector<std::size_t> block_end;

  std::size_t blocks() const noexcept { return block_end.size(); }
  std::span<const Point> block(std::size_t k) const;  // 1-based
  /// Elements of blocks k..K as one span.
  std::span<const Point> tail_from_block(std::size_t k) const;
};

/// Guarantees for every k <= K:
///   (a) every element of block k lies within open distance 1/k of F;
///   (b) every point of F lies within 1/k + A.resolution of block k.
/// Requires every point of F within A.resolution of A. Throws
/// ConstructionError (resolution too coarse) if some block is empty.
LimitSequence limit_point_sequence(const SampledSet& a, const SampledSet& f, int depth,
                                   Metric m = Metric::kEuclidean);

}  // namespace cluster_forge

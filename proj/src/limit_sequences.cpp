#include "cluster_forge/limit_sequences.hpp"

#include <fmt/format.h>

#include "cluster_forge/errors.hpp"
#include "cluster_forge/nets.hpp"

namespace cluster_forge {

std::span<const Point> LimitSequence::block(std::size_t k) const {
  if (k < 1 || k > block_end.size()) throw InputError("block index out of range");
  const std::size_t begin = k == 1 ? 0 : block_end[k - 2];
  return std::span<const Point>(points).subspan(begin, block_end[k - 1] - begin);
}

std::span<const Point> LimitSequence::tail_from_block(std::size_t k) const {
  if (k < 1 || k > block_end.size()) throw InputError("block index out of range");
  const std::size_t begin = k == 1 ? 0 : block_end[k - 2];
  return std::span<const Point>(points).subspan(begin);
}

LimitSequence limit_point_sequence(const SampledSet& a, const SampledSet& f, int depth,
                                   Metric m) {
  if (depth < 1) throw InputError("sequence depth must be at least 1");
  if (a.empty()) throw InputError("ambient sample A is empty");
  for (const Point& p : f.points()) {
    if (dist_to_set(p, a, m) > a.resolution()) {
      throw InputError(fmt::format("F point {} is farther than {:.17g} from A", to_string(p),
                                   a.resolution()));
    }
  }
  LimitSequence seq;
  for (int k = 1; k <= depth; ++k) {
    const double radius = 1.0 / k;
    const SampledSet net = greedy_separated_net(a, radius, m);
    std::size_t added = 0;
    if (!f.empty()) {
      for (const Point& p : net.points()) {
        if (dist_to_set(p, f, m) < radius) {
          seq.points.push_back(p);
          ++added;
        }
      }
      if (added == 0) {
        throw ConstructionError(
            ConstructionFailure::kResolutionTooCoarse,
            fmt::format("block {} of the limit sequence is empty; refine A below 1/{}", k, k));
      }
    }
    seq.block_end.push_back(seq.points.size());
  }
  return seq;
}

}  // namespace cluster_forge

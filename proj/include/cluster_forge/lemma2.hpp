#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cluster_forge {

/// Bitmask subset of a small universe (at most 32 elements).
using ElementSet = std::uint32_t;

/// Finite partial order on {0, ..., n-1} (n <= 32) that is directed: every
/// pair has an upper bound. up[i] holds bit j iff i <= j.
class DirectedOrder {
 public:
  explicit DirectedOrder(std::vector<ElementSet> up);

  /// 0 < 1 < ... < n-1.
  static DirectedOrder chain(std::size_t n);

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return (up_[i] >> j) & 1u; }
  const std::vector<ElementSet>& up() const noexcept { return up_; }

  /// Downward closed subsets, as bitmasks over the order's elements.
  std::vector<ElementSet> downsets() const;

 private:
  std::vector<ElementSet> up_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> strict_;  // i < j
  friend bool lemma2_oracle(const DirectedOrder&, std::span<const ElementSet>,
                            std::span<const ElementSet>);
};

/// Checks  n_m (A_m u B_m)  subset of  (n_m A_m) u (n_m B_m)  for families
/// indexed by the order. Both families must be decreasing (m <= m' implies
/// A_m' subset of A_m); violations raise InputError.
bool lemma2_oracle(const DirectedOrder& order, std::span<const ElementSet> a,
                   std::span<const ElementSet> b);

/// Directed orders with 1..max_size elements, one per isomorphism class.
std::vector<DirectedOrder> directed_orders_up_to_iso(std::size_t max_size);

struct Lemma2Sweep {
  std::size_t orders = 0;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
};

/// Runs lemma2_oracle on every directed order of size <= max_order and every
/// pair of decreasing families over a universe of `universe` elements, up
/// to relabeling of the universe. Each universe element is described by the
/// pair of downsets {m : e in A_m}, {m : e in B_m}; families are multisets
/// of such pairs. An element in no set stands for a smaller universe.
Lemma2Sweep lemma2_exhaustive_sweep(std::size_t max_order, std::size_t universe);

}  // namespace cluster_forge

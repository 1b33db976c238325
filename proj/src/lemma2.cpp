#include "cluster_forge/lemma2.hpp"

#include <algorithm>
#include <numeric>

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

DirectedOrder::DirectedOrder(std::vector<ElementSet> up) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  if (n == 0 || n > 32) throw InputError("order size must be in 1..32");
  for (std::size_t i = 0; i < n; ++i) {
    if (n < 32 && (up_[i] >> n) != 0) throw InputError("order relation names unknown elements");
    if (!leq(i, i)) throw InputError("order is not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) throw InputError("order is not antisymmetric");
      if (leq(i, j) && (up_[j] & ~up_[i]) != 0) throw InputError("order is not transitive");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((up_[i] & up_[j]) == 0) {
        throw InputError("order is not directed: two elements have no common upper bound");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq(i, j)) {
        strict_.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
      }
    }
  }
}

DirectedOrder DirectedOrder::chain(std::size_t n) {
  std::vector<ElementSet> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) up[i] |= ElementSet{1} << j;
  }
  return DirectedOrder(std::move(up));
}

std::vector<ElementSet> DirectedOrder::downsets() const {
  const std::size_t n = size();
  std::vector<ElementSet> out;
  for (ElementSet s = 0; s < (ElementSet{1} << n); ++s) {
    bool closed = true;
    for (const auto& [i, j] : strict_) {
      if (((s >> j) & 1u) && !((s >> i) & 1u)) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

bool lemma2_oracle(const DirectedOrder& order, std::span<const ElementSet> a,
                   std::span<const ElementSet> b) {
  if (a.size() != order.size() || b.size() != order.size()) {
    throw InputError("family length differs from order size");
  }
  for (const auto& [i, j] : order.strict_) {
    if ((a[j] & ~a[i]) != 0 || (b[j] & ~b[i]) != 0) {
      throw InputError("family is not decreasing along the order");
    }
  }
  ElementSet meet_union = ~ElementSet{0}, meet_a = ~ElementSet{0}, meet_b = ~ElementSet{0};
  for (std::size_t m = 0; m < a.size(); ++m) {
    meet_union &= a[m] | b[m];
    meet_a &= a[m];
    meet_b &= b[m];
  }
  return (meet_union & ~(meet_a | meet_b)) == 0;
}

std::vector<DirectedOrder> directed_orders_up_to_iso(std::size_t max_size) {
  std::vector<DirectedOrder> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) off.emplace_back(i, j);
      }
    }
    std::vector<std::vector<ElementSet>> canon_seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
      std::vector<ElementSet> up(n);
      for (std::size_t i = 0; i < n; ++i) up[i] = ElementSet{1} << i;
      for (std::size_t b = 0; b < off.size(); ++b) {
        if ((mask >> b) & 1u) up[off[b].first] |= ElementSet{1} << off[b].second;
      }
      try {
        DirectedOrder order(up);
      } catch (const InputError&) {
        continue;
      }
      // Canonical form: lexicographically least relabeling.
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<ElementSet> best;
      do {
        std::vector<ElementSet> relabeled(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if ((up[i] >> j) & 1u) relabeled[perm[i]] |= ElementSet{1} << perm[j];
          }
        }
        if (best.empty() || relabeled < best) best = relabeled;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (std::find(canon_seen.begin(), canon_seen.end(), best) == canon_seen.end()) {
        canon_seen.push_back(best);
        out.emplace_back(std::move(best));
      }
    }
  }
  return out;
}

Lemma2Sweep lemma2_exhaustive_sweep(std::size_t max_order, std::size_t universe) {
  if (universe == 0 || universe > 32) throw InputError("universe size must be in 1..32");
  Lemma2Sweep sweep;
  for (const DirectedOrder& order : directed_orders_up_to_iso(max_order)) {
    ++sweep.orders;
    const std::size_t n = order.size();
    const std::vector<ElementSet> downs = order.downsets();
    std::vector<std::pair<ElementSet, ElementSet>> patterns;
    for (ElementSet da : downs) {
      for (ElementSet db : downs) patterns.emplace_back(da, db);
    }
    // Nondecreasing pattern index per universe element.
    std::vector<std::size_t> pick(universe, 0);
    std::vector<ElementSet> a(n), b(n);
    while (true) {
      std::fill(a.begin(), a.end(), 0);
      std::fill(b.begin(), b.end(), 0);
      for (std::size_t e = 0; e < universe; ++e) {
        const auto [da, db] = patterns[pick[e]];
        for (std::size_t m = 0; m < n; ++m) {
          if ((da >> m) & 1u) a[m] |= ElementSet{1} << e;
          if ((db >> m) & 1u) b[m] |= ElementSet{1} << e;
        }
      }
      ++sweep.instances;
      if (!lemma2_oracle(order, a, b)) ++sweep.failures;

      std::size_t e = universe;
      while (e > 0 && pick[e - 1] == patterns.size() - 1) --e;
      if (e == 0) break;
      ++pick[e - 1];
      for (std::size_t t = e; t < universe; ++t) pick[t] = pick[e - 1];
    }
  }
  return sweep;
}

}  // namespace cluster_forge

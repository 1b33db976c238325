#include "cluster_forge/set_oracle.hpp"

#include "cluster_forge/errors.hpp"

namespace cluster_forge {

SetOracle::SetOracle(SampledSet sample, Metric metric)
    : sample_(std::move(sample)), metric_(metric) {}

SetOracle SetOracle::from_box(const Box& box, double step, Metric metric) {
  SetOracle out(SampledSet(box_lattice(box, step), step), metric);
  out.box_ = box;
  return out;
}

double SetOracle::distance(const Point& p) const {
  if (box_) return dist_to_box(p, *box_, metric_);
  return dist_to_set(p, sample_, metric_);
}

SetOracle SetOracle::restricted_to(SampledSet sub) const {
  if (sub.size() == sample_.size() && sub.points() == sample_.points()) return *this;
  return SetOracle(std::move(sub), metric_);
}

}  // namespace cluster_forge

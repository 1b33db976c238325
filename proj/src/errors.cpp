#include "cluster_forge/errors.hpp"

namespace cluster_forge {

const char* to_string(ConstructionFailure kind) {
  switch (kind) {
    case ConstructionFailure::kInsufficientDepth: return "insufficient depth";
    case ConstructionFailure::kResolutionTooCoarse: return "resolution too coarse";
    case ConstructionFailure::kDomainTooSparse: return "domain too sparse";
    case ConstructionFailure::kValueGridTooCoarse: return "value grid too coarse";
    case ConstructionFailure::kSceneInvariant: return "scene invariant violated";
  }
  return "construction failure";
}

}  // namespace cluster_forge

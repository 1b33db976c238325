#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cluster_forge {

/// Bad arguments to a library call: dimension mismatch, empty set where a
/// nonempty one is required, non-positive radius, and so on.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scene file or in-memory scene that violates one of the scene invariants.
/// `field` is a JSON-pointer-like path to the offending entry when known.
class SceneError : public std::runtime_error {
 public:
  SceneError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class ConstructionFailure {
  kInsufficientDepth,
  kResolutionTooCoarse,
  kDomainTooSparse,
  kValueGridTooCoarse,
  kSceneInvariant,
};

const char* to_string(ConstructionFailure kind);

/// A construction could not be carried out at the configured finite
/// resolution. The message says which scale has to be refined.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(ConstructionFailure kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ConstructionFailure kind() const noexcept { return kind_; }

 private:
  ConstructionFailure kind_;
};

}  // namespace cluster_forge

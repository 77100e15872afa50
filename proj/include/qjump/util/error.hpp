#pragma once

#include <stdexcept>
#include <string>

namespace qjump {

// Bad configuration, incompatible dimensions, malformed files. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite or otherwise out-of-domain numeric input to an operation.
class InputDomainError : public std::runtime_error {
 public:
  explicit InputDomainError(const std::string& what) : std::runtime_error(what) {}
};

// Physics produced NaN/Inf; carries the physics step index where it happened.
class SimDivergedError : public std::runtime_error {
 public:
  SimDivergedError(const std::string& what, long step_index)
      : std::runtime_error(what + " (step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}
  long step_index() const { return step_index_; }

 private:
  long step_index_;
};

// Training-side failure (diverged loss, failed rollout). CLI exit code 3.
class TrainError : public std::runtime_error {
 public:
  explicit TrainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qjump

#pragma once

#include <string>

#include "qjump/util/error.hpp"

namespace qjump {

enum class Task { kJumpInPlace, kJumpForward, kPronk, kBackflip };

// Observation layout differs between the two learning stages: the flight
// flag is only part of the PPO-stage vector.
enum class Stage { kArs, kPpo };

inline std::string task_name(Task t) {
  switch (t) {
    case Task::kJumpInPlace: return "jip";
    case Task::kJumpForward: return "jf";
    case Task::kPronk: return "pronk";
    case Task::kBackflip: return "backflip";
  }
  return "?";
}

inline Task parse_task(const std::string& name) {
  if (name == "jip") return Task::kJumpInPlace;
  if (name == "jf") return Task::kJumpForward;
  if (name == "pronk") return Task::kPronk;
  if (name == "backflip") return Task::kBackflip;
  throw ConfigError("unknown task '" + name + "' (expected jip|jf|pronk|backflip)");
}

}  // namespace qjump

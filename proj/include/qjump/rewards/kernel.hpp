#pragma once

#include <algorithm>
#include <cmath>

#include "qjump/util/error.hpp"

namespace qjump::rewards {

// Exponential kernel g(x) = a e^{-b |x|}; output in (0, a].
struct Kernel {
  double amplitude = 1.0;  // a
  double decay = 0.0;      // b

  double operator()(double x) const {
    return amplitude * std::exp(-decay * std::abs(x));
  }

  void validate() const {
    if (!(amplitude > 0.0) || !(decay >= 0.0))
      throw ConfigError("Kernel: requires a > 0 and b >= 0");
  }
};

// clip{0, v/cap, 1}
inline double normalize_clip(double v, double cap) {
  if (!(cap > 0.0)) throw ConfigError("normalize_clip: cap must be positive");
  return std::clamp(v / cap, 0.0, 1.0);
}

}  // namespace qjump::rewards

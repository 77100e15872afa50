#pragma once

#include <cstdint>
#include <random>

namespace qjump {

// splitmix64; used to derive stream seeds from (run seed, purpose counters)
// so that worker scheduling never influences which numbers a consumer sees.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive a child seed from a root seed and up to three stream indices.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t s = splitmix64(root ^ splitmix64(a));
  s = splitmix64(s ^ splitmix64(b + 0x632be59bd9b4e019ULL));
  return splitmix64(s ^ splitmix64(c + 0x9e3779b97f4a7c15ULL));
}

// Thin RNG owning its engine; every consumer gets a private instance built
// from a derived seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double gaussian(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  std::uint64_t next_u64() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qjump

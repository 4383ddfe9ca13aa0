#pragma once

#include <cstdint>
#include <random>

namespace dfm {

// Seeded generator with a platform-independent mapping to doubles.
// std::uniform_real_distribution is implementation-defined, which would make
// generated fields differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t next() { return engine_(); }

  // Derives an independent seed for a numbered sub-stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  static std::uint64_t mix(std::uint64_t x);

  std::mt19937_64 engine_;
};

}  // namespace dfm

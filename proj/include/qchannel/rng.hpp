#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qchannel {

// Seeded random stream. Every draw reduces to raw mt19937_64 output (which the
// standard pins down bit-exactly), so sequences are reproducible across
// platforms and standard-library versions. Distribution adapters from
// <random> are avoided on purpose: their output is implementation-defined.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(mix(seed)) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; the second deviate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();  // in [0,1), so 1-u1 > 0
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  // Key for the `index`-th substream of `seed`. Evaluation order of the
  // substreams cannot change their contents.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t index) {
    return mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
  }

 private:
  // splitmix64 finalizer; decorrelates nearby seeds.
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace qchannel

#pragma once

#include <cstdint>
#include <utility>

namespace eur {

struct SeedSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Counter-based generator: output n is a SplitMix64 finalizer applied to
/// (key(seed, stream) + n * golden). Any draw can be addressed directly by
/// its counter, so shards of a computation reproduce the serial sequence.
class CounterRng {
 public:
  explicit CounterRng(SeedSpec spec, std::uint64_t counter = 0);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();
  std::pair<double, double> normal_pair();
  /// Exponential(1).
  double exponential();

  void seek(std::uint64_t counter) {
    counter_ = counter;
    has_spare_ = false;
  }
  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace eur

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace heavytail {

/// Identifies one random stream: a master seed plus a stream index.
/// Replication j of an experiment uses Seed{master, j}.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// 64-bit Mersenne twister keyed by a Seed.
///
/// The conversions to uniform reals and bounded integers are done here rather
/// than through <random> distributions, whose output is implementation
/// defined. Draw sequences are therefore bit-identical across standard
/// libraries.
class Rng {
 public:
  explicit Rng(Seed seed);

  std::uint64_t next() { return engine_(); }

  /// Uniform on (0, 1]; never returns 0, so V^{-1/gamma} is always finite.
  double uniform_open_zero() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Fisher-Yates shuffle driven by Rng::below.
template <typename T>
void shuffle(std::span<T> values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace heavytail

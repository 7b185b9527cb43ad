#include "heavytail/rng.hpp"

#include <stdexcept>

namespace heavytail {

namespace {

std::mt19937_64 make_engine(Seed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.master),
                    static_cast<std::uint32_t>(seed.master >> 32),
                    static_cast<std::uint32_t>(seed.stream),
                    static_cast<std::uint32_t>(seed.stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(Seed seed) : engine_(make_engine(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= limit) return r % bound;
  }
}

}  // namespace heavytail

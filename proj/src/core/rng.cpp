#include "freshcsma/core/rng.hpp"

#include <cmath>
#include <limits>

namespace freshcsma {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t substream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(substream),
                    static_cast<std::uint32_t>(substream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t substream)
    : seed_(seed), substream_(substream), engine_(seeded_engine(seed, substream)) {}

double RngStream::uniform() {
  // (k + 0.5) / 2^53 never hits 0 or 1.
  constexpr double kScale = 1.0 / 9007199254740992.0;
  return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

double RngStream::unit_exponential() { return -std::log(uniform()); }

double RngStream::log_unit_exponential() { return std::log(unit_exponential()); }

std::size_t RngStream::uniform_index(std::size_t n) {
  const auto bound = static_cast<std::uint64_t>(n);
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t replication) {
  if (replication == 0) return base_seed;
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = base_seed + 0x9e3779b97f4a7c15ULL * (replication + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace freshcsma

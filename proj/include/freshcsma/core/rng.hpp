#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace freshcsma {

/// Who owns a substream. Streams of different roles never share state, so
/// adding draws for one role cannot shift another role's sequence.
enum class StreamRole : std::uint8_t {
  SourceTimer = 1,
  TieBreak = 2,
  CentralSampler = 3,
  MarkovSource = 4,
  Validator = 5,
};

/// Packs (role, instance, index) into one substream id.
constexpr std::uint64_t substream_id(StreamRole role, std::uint32_t instance,
                                     std::uint32_t index) {
  return (static_cast<std::uint64_t>(role) << 56) |
         (static_cast<std::uint64_t>(instance & 0x00ffffffu) << 32) | index;
}

/// Seeded pseudorandom stream. Identical (seed, substream, call sequence)
/// reproduces identical draws; every transform below is written out
/// explicitly rather than going through <random> distributions, whose
/// algorithms are implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t substream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t substream() const { return substream_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();

  /// Unit-rate exponential draw, -ln U.
  double unit_exponential();

  /// ln of a unit-rate exponential draw, ln(-ln U).
  double log_unit_exponential();

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t substream_;
  std::mt19937_64 engine_;
};

/// Seed for replication r of an experiment with the given base seed.
std::uint64_t replication_seed(std::uint64_t base_seed, std::uint64_t replication);

}  // namespace freshcsma

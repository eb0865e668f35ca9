#pragma once

#include <cstdint>

namespace cosmo {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: output i of a stream is a pure function of the
// stream key and i, so draws can be addressed directly (dense sampler uses the
// arc rank as counter) or consumed sequentially (sparse sampler).
class CounterRng {
 public:
  constexpr explicit CounterRng(std::uint64_t key) : key_(key) {}

  // Stream for one replication of an experiment.
  static constexpr CounterRng for_stream(std::uint64_t master_seed, std::uint64_t stream) {
    return CounterRng(mix64(mix64(master_seed ^ 0x6a09e667f3bcc909ULL) + 0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

  constexpr CounterRng substream(std::uint64_t tag) const { return for_stream(key_, tag); }

  constexpr std::uint64_t key() const { return key_; }

  constexpr std::uint64_t bits_at(std::uint64_t counter) const {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * (counter + 1));
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform_at(std::uint64_t counter) const {
    return static_cast<double>(bits_at(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1].
  constexpr double uniform_open_at(std::uint64_t counter) const {
    return static_cast<double>((bits_at(counter) >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

// Sequential cursor over a CounterRng stream.
class RngCursor {
 public:
  constexpr explicit RngCursor(CounterRng rng) : rng_(rng) {}

  constexpr std::uint64_t next_bits() { return rng_.bits_at(counter_++); }
  constexpr double next_uniform() { return rng_.uniform_at(counter_++); }
  constexpr double next_uniform_open() { return rng_.uniform_open_at(counter_++); }
  constexpr std::uint64_t draws() const { return counter_; }

  // Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t next_below(std::uint64_t bound);

  // UniformRandomBitGenerator interface for <random> distributions.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next_bits(); }

 private:
  CounterRng rng_;
  std::uint64_t counter_ = 0;
};

}  // namespace cosmo

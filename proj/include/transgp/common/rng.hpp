#ifndef TRANSGP_COMMON_RNG_HPP_
#define TRANSGP_COMMON_RNG_HPP_

#include <cstdint>
#include <random>

namespace transgp {

// Seeded random source. Wraps mt19937_64 (whose output sequence is fixed by
// the standard) and derives every distribution by hand so that draws are
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of mantissa.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive on both ends.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform index in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }
  double exponential(double rate);
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Counter-based seed derivation (splitmix64 finaliser over the mixed triple).
// Used to split one master seed into independent, order-free streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

namespace seed_stream {
inline constexpr std::uint64_t kInit = 1;
inline constexpr std::uint64_t kGeneration = 2;
inline constexpr std::uint64_t kOffspring = 3;
inline constexpr std::uint64_t kTest = 4;
inline constexpr std::uint64_t kRun = 5;
inline constexpr std::uint64_t kInstance = 6;
inline constexpr std::uint64_t kTraining = 7;
inline constexpr std::uint64_t kSampling = 8;
}  // namespace seed_stream

}  // namespace transgp

#endif  // TRANSGP_COMMON_RNG_HPP_

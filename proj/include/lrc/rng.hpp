#ifndef LRC_RNG_HPP
#define LRC_RNG_HPP

// Deterministic random streams for the simulator and tests.
//
// The generator is SplitMix64 (Steele/Lea/Flood; the reference generator of
// java.util.SplittableRandom).  Full algorithm, so any implementation can
// reproduce the streams bit for bit:
//
//   next():  state += 0x9E3779B97F4A7C15
//            z = state
//            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//            z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//            return z ^ (z >> 31)
//
// Substream i of a master seed s is SplitMix64 seeded with
// mix(s, i) = finalize(s + (i + 1) * 0x9E3779B97F4A7C15), where finalize is
// the z-scrambling above.  Bounded draws use rejection sampling, so they are
// unbiased and reproducible across platforms.

#include <cstdint>

namespace lrc {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  /// Uniform draw from [0, n), n >= 1.  Rejection on the top of the range.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t u;
    do {
      u = next();
    } while (u >= limit);
    return u % n;
  }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Independent substream derivation (order-free parallel trials).
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(finalize(seed + (index + 1) * 0x9E3779B97F4A7C15ULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace lrc

#endif  // LRC_RNG_HPP

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kcs/rational.hpp"
#include "kcs/ring.hpp"

namespace kcs {

/// Pinned generator: xoshiro256** whose state is filled by splitmix64. A
/// stream for (seed, index) starts splitmix64 at
/// seed XOR (0x9E3779B97F4A7C15 * (index + 1)) mod 2^64.
class Xoshiro256 {
 public:
  static constexpr const char* algorithm = "xoshiro256**/splitmix64";

  explicit Xoshiro256(std::uint64_t seed);
  static Xoshiro256 stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// Numerator uniform in [-height, height], denominator uniform in [1, height].
Rational random_rational(Xoshiro256& gen, std::int64_t height);
/// Numerator and denominator uniform in [1, height].
Rational random_positive_rational(Xoshiro256& gen, std::int64_t height);

/// Random class of the given degree; imaginary parts are drawn only when
/// `complex` is set.
ClassVector random_class(const IntersectionRing& r, std::size_t degree, std::int64_t height, Xoshiro256& gen,
                         bool complex = false);

/// Same draw as random_class on the (seed, index) stream.
ClassVector sample_random_class(const IntersectionRing& r, std::size_t degree, std::int64_t height,
                                std::uint64_t seed, std::uint64_t index, bool complex = false);

/// Strictly positive rational combination of the cone generators, flagged
/// kahler. The generators must span the Kahler cone's interior this way
/// (declared samples of a ring bundle).
ClassVector random_kahler_class(std::span<const ClassVector> generators, std::int64_t height, Xoshiro256& gen);

/// omega and n-2p further classes, each from random_kahler_class.
MixedSetup random_setup(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> generators,
                        std::int64_t height, Xoshiro256& gen);

}  // namespace kcs

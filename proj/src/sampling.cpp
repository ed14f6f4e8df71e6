#include "kcs/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace kcs {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
}

Xoshiro256 Xoshiro256::stream(std::uint64_t seed, std::uint64_t index) {
  return Xoshiro256(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Xoshiro256::below: zero bound");
  // Reject the low residue class so every value mod bound is equally likely.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t Xoshiro256::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Xoshiro256::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

Rational random_rational(Xoshiro256& gen, std::int64_t height) {
  if (height < 1) throw std::invalid_argument("height must be at least 1");
  const auto num = gen.uniform(-height, height);
  const auto den = gen.uniform(1, height);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

Rational random_positive_rational(Xoshiro256& gen, std::int64_t height) {
  if (height < 1) throw std::invalid_argument("height must be at least 1");
  const auto num = gen.uniform(1, height);
  const auto den = gen.uniform(1, height);
  return Rational(static_cast<long>(num), static_cast<long>(den));
}

ClassVector random_class(const IntersectionRing& r, std::size_t degree, std::int64_t height, Xoshiro256& gen,
                         bool complex) {
  Vector c(r.hodge(degree));
  for (auto& z : c) {
    Rational re = random_rational(gen, height);
    Rational im = complex ? random_rational(gen, height) : Rational();
    z = GaussianRational(std::move(re), std::move(im));
  }
  return ClassVector(degree, std::move(c));
}

ClassVector sample_random_class(const IntersectionRing& r, std::size_t degree, std::int64_t height,
                                std::uint64_t seed, std::uint64_t index, bool complex) {
  Xoshiro256 gen = Xoshiro256::stream(seed, index);
  return random_class(r, degree, height, gen, complex);
}

ClassVector random_kahler_class(std::span<const ClassVector> generators, std::int64_t height, Xoshiro256& gen) {
  if (generators.empty()) throw std::invalid_argument("no Kahler cone generators declared");
  ClassVector sum = generators.front().scaled(random_positive_rational(gen, height));
  for (std::size_t k = 1; k < generators.size(); ++k) sum += generators[k].scaled(random_positive_rational(gen, height));
  return sum.with_flag(Positivity::kahler);
}

MixedSetup random_setup(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> generators,
                        std::int64_t height, Xoshiro256& gen) {
  ClassVector omega = random_kahler_class(generators, height, gen);
  std::vector<ClassVector> omegas;
  for (std::size_t k = 0; k + 2 * p < r.dim(); ++k) omegas.push_back(random_kahler_class(generators, height, gen));
  return MixedSetup::make(r, p, std::move(omega), std::move(omegas));
}

}  // namespace kcs

#pragma once

#include <array>
#include <cstdint>

namespace boolfun {

/// SplitMix64 finalizer; the mixing primitive behind seed expansion
/// and stream derivation.
std::uint64_t mix64(std::uint64_t z);

/// Seed of an independent child stream, a pure function of the parent
/// seed and the stream index:
///
///   child = mix64((seed ^ 0xa3ec647659359acd) + (stream + 1) * 0x9e3779b97f4a7c15)
///
/// Batches of trials keyed by index can therefore be replayed or
/// reordered without replaying the parent sequence.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// xoshiro256++ with SplitMix64 seed expansion. All draws are
/// implemented here rather than with std::*_distribution, so a seed
/// produces the same sequence under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53-bit resolution.
  double next_unit();
  /// Uniform on [0, bound), unbiased; bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound);
  double next_uniform(double lo, double hi);
  /// Standard normal via Box-Muller; consumes two uniforms per pair.
  double next_gaussian();
  /// -1 or +1 with equal probability.
  int next_sign();

  std::uint64_t seed() const { return seed_; }
  /// Rng(derive_seed(seed(), stream)).
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_ = 0;
  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace boolfun

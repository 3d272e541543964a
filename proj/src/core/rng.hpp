#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace ptlab {

/// Reproducible seed: a base value plus a stream index (replicate number).
/// Generators derived from distinct streams are statistically independent;
/// the pair fully determines every draw, independent of thread scheduling.
struct Seed {
  std::uint64_t base = 0;
  std::uint64_t stream = 0;

  /// Derive a decorrelated seed for an internal sub-purpose (eigenvalue draw,
  /// eigenvector draw, retry, ...) without touching the stream index.
  Seed substream(std::uint64_t salt) const;
};

/// SplitMix64 finalizer; bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// xoshiro256++ generator seeded by hashing (base, stream) through mix64.
class Rng {
 public:
  explicit Rng(Seed seed);

  std::uint64_t next_u64();

  double uniform01();    // [0, 1), 53-bit
  double uniform_pos();  // (0, 1], safe for log()

  /// Standard normal via Marsaglia's polar method (second variate cached).
  double normal();

  /// Complex normal with E|z|^2 = 1 (real and imaginary parts N(0, 1/2)).
  std::complex<double> complex_normal();

  /// Gamma(shape, 1). Marsaglia-Tsang for shape >= 1; for shape < 1 the draw
  /// is boosted to shape+1 and corrected by a uniform power.
  double gamma(double shape);

  /// chi_k distribution, k > 0 real: sqrt(2 * Gamma(k/2)).
  double chi(double dof);

 private:
  std::array<std::uint64_t, 4> state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace ptlab

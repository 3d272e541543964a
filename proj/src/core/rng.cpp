#include "core/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace ptlab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Seed Seed::substream(std::uint64_t salt) const {
  return Seed{mix64(base ^ mix64(salt + 0x5851F42D4C957F2DULL)), stream};
}

Rng::Rng(Seed seed) {
  std::uint64_t h = mix64(seed.base);
  h = mix64(h ^ mix64(seed.stream));
  // SplitMix64 chain fills the state; all-zero state is unreachable this way
  // but guard anyway.
  for (auto& s : state_) {
    h += kGolden;
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    s = z ^ (z >> 31);
  }
  if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0) {
    state_[0] = kGolden;
  }
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  has_spare_ = true;
  return u * m;
}

std::complex<double> Rng::complex_normal() {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  const double re = normal() * kInvSqrt2;
  const double im = normal() * kInvSqrt2;
  return {re, im};
}

double Rng::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("gamma: shape must be positive");
  }
  if (shape < 1.0) {
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform_pos(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::chi(double dof) {
  if (!(dof > 0.0)) {
    throw std::invalid_argument("chi: dof must be positive");
  }
  return std::sqrt(2.0 * gamma(0.5 * dof));
}

}  // namespace ptlab

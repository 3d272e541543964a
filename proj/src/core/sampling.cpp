#include "core/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace ptlab {

namespace {

constexpr std::uint64_t kHaarRetrySalt = 0x4851BEEFULL;

void check_dim(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be >= 1");
}

}  // namespace

BetaIndex::BetaIndex(int b) : beta(b) {
  if (b != 1 && b != 2) throw std::invalid_argument("beta must be 1 or 2");
}

HaarMatrix HaarMatrix::from_real(RealMat entries) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("HaarMatrix: not square");
  HaarMatrix u;
  u.n_ = entries.rows();
  u.beta_ = 1;
  u.real_ = std::move(entries);
  return u;
}

HaarMatrix HaarMatrix::from_complex(ComplexMat entries) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("HaarMatrix: not square");
  HaarMatrix u;
  u.n_ = entries.rows();
  u.beta_ = 2;
  u.complex_ = std::move(entries);
  return u;
}

double HaarMatrix::sq_modulus(std::size_t i, std::size_t k) const {
  if (beta_ == 1) {
    const double x = real_(i, k);
    return x * x;
  }
  return std::norm(complex_(i, k));
}

RealMat HaarMatrix::squared_moduli() const {
  RealMat p(n_, n_);
  if (beta_ == 1) {
    const double* src = real_.data();
    double* dst = p.data();
    for (std::size_t idx = 0; idx < n_ * n_; ++idx) dst[idx] = src[idx] * src[idx];
  } else {
    const std::complex<double>* src = complex_.data();
    double* dst = p.data();
    for (std::size_t idx = 0; idx < n_ * n_; ++idx) dst[idx] = std::norm(src[idx]);
  }
  return p;
}

double sample_gamma(double shape, Seed seed) {
  Rng rng(seed);
  return rng.gamma(shape);
}

std::vector<double> sample_dirichlet_weights(std::size_t n, double beta_prime, Seed seed) {
  check_dim(n);
  if (!(beta_prime > 0.0)) throw std::invalid_argument("beta_prime must be positive");
  Rng rng(seed);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = rng.gamma(beta_prime);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

RealMat sample_ginibre_real(std::size_t n, Seed seed) {
  check_dim(n);
  Rng rng(seed);
  RealMat g(n, n);
  double* a = g.data();
  for (std::size_t idx = 0; idx < n * n; ++idx) a[idx] = rng.normal();
  return g;
}

ComplexMat sample_ginibre_complex(std::size_t n, Seed seed) {
  check_dim(n);
  Rng rng(seed);
  ComplexMat g(n, n);
  std::complex<double>* a = g.data();
  for (std::size_t idx = 0; idx < n * n; ++idx) a[idx] = rng.complex_normal();
  return g;
}

HaarMatrix sample_haar(std::size_t n, BetaIndex beta, Seed seed) {
  check_dim(n);
  Seed current = seed;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    if (beta.real()) {
      RealMat g = sample_ginibre_real(n, current);
      if (qr_positive_diagonal(g)) return HaarMatrix::from_real(std::move(g));
    } else {
      ComplexMat g = sample_ginibre_complex(n, current);
      if (qr_positive_diagonal(g)) return HaarMatrix::from_complex(std::move(g));
    }
    current = seed.substream(kHaarRetrySalt + static_cast<std::uint64_t>(attempt));
  }
  throw NumericError("sample_haar: repeated QR breakdown (singular Ginibre sample)");
}

std::vector<double> sample_haar_row_weights(std::size_t n, BetaIndex beta, Seed seed) {
  check_dim(n);
  Rng rng(seed);
  std::vector<double> w(n);
  for (;;) {
    double total = 0.0;
    for (auto& x : w) {
      if (beta.real()) {
        const double g = rng.normal();
        x = g * g;
      } else {
        x = std::norm(rng.complex_normal());
      }
      total += x;
    }
    if (total > 0.0) {
      for (auto& x : w) x /= total;
      return w;
    }
  }
}

}  // namespace ptlab

#pragma once

#include <cstddef>
#include <vector>

#include "core/linalg.hpp"
#include "core/rng.hpp"

namespace ptlab {

/// Dyson index: 1 for real/orthogonal, 2 for complex/unitary.
struct BetaIndex {
  int beta = 2;

  explicit BetaIndex(int b);
  double beta_prime() const { return 0.5 * beta; }
  bool real() const { return beta == 1; }
};

/// Orthogonal (beta=1) or unitary (beta=2) matrix; exactly one storage side
/// is populated.
class HaarMatrix {
 public:
  static HaarMatrix from_real(RealMat entries);
  static HaarMatrix from_complex(ComplexMat entries);

  std::size_t dim() const { return n_; }
  int beta() const { return beta_; }

  double sq_modulus(std::size_t i, std::size_t k) const;
  /// |U_ik|^2 for the full matrix; the hot representation for path building.
  RealMat squared_moduli() const;

  const RealMat& real_entries() const { return real_; }
  const ComplexMat& complex_entries() const { return complex_; }

 private:
  HaarMatrix() = default;
  std::size_t n_ = 0;
  int beta_ = 0;
  RealMat real_;
  ComplexMat complex_;
};

/// One Gamma(shape, 1) draw.
double sample_gamma(double shape, Seed seed);

/// Dir_n(beta_prime) weight vector: n normalized iid Gamma(beta_prime) draws.
/// Entries are positive and sum to 1.
std::vector<double> sample_dirichlet_weights(std::size_t n, double beta_prime, Seed seed);

/// Ginibre matrices: iid standard real Gaussians, or iid complex Gaussians
/// with E|z|^2 = 1.
RealMat sample_ginibre_real(std::size_t n, Seed seed);
ComplexMat sample_ginibre_complex(std::size_t n, Seed seed);

/// Haar-distributed orthogonal/unitary matrix: QR of a Ginibre sample with
/// the Q columns rescaled so the R diagonal is positive (raw QR output is
/// not Haar). Retries on the next substream if the Ginibre sample is
/// numerically singular, at most 3 times.
HaarMatrix sample_haar(std::size_t n, BetaIndex beta, Seed seed);

/// Squared moduli of one Haar row, (|U_{1,1}|^2, ..., |U_{1,n}|^2): a
/// normalized Gaussian vector. Cheaper than a full matrix when only a single
/// row enters the statistic.
std::vector<double> sample_haar_row_weights(std::size_t n, BetaIndex beta, Seed seed);

}  // namespace ptlab

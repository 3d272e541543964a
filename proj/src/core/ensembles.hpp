#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"

namespace ptlab {

enum class EigenSource { beta_hermite, dense_gaussian, quantile, iid, file };

struct EigenvalueVector {
  std::vector<double> values;  // finite reals, ascending for sampled sources
  EigenSource source = EigenSource::file;

  std::size_t size() const { return values.size(); }
};

/// Symmetric tridiagonal matrix with nonnegative off-diagonals.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;  // length diag.size()-1
};

/// Tridiagonal model for the Gaussian beta-ensemble with quadratic potential:
/// diagonal iid N(0, 2/(n*beta)), k-th off-diagonal chi_{beta(n-k)}/sqrt(n*beta).
/// Its eigenvalue law matches dense GOE/GUE sampling in this normalization and
/// extends to any beta > 0.
TridiagonalMatrix sample_beta_hermite_tridiag(std::size_t n, double beta, Seed seed);

/// Dense Gaussian invariant ensembles, normalized so the spectrum approaches
/// the semicircle law on [-2, 2]:
///   beta=1: symmetric, diagonal N(0, 2/n), off-diagonal N(0, 1/n);
///   beta=2: Hermitian, diagonal N(0, 1/n), off-diagonal Re/Im each N(0, 1/(2n)).
RealMat sample_dense_goe(std::size_t n, Seed seed);
ComplexMat sample_dense_gue(std::size_t n, Seed seed);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending.
EigenvalueVector tridiag_eigenvalues(const TridiagonalMatrix& m, double rel_tol = 1e-12);

/// Deterministic semicircle support points: lambda_k = F^{-1}((k - 1/2)/n),
/// strictly increasing, symmetric about 0.
EigenvalueVector semicircle_quantiles(std::size_t n);

struct IidLaw {
  enum class Kind { uniform, two_point };
  Kind kind = Kind::uniform;
  double a = 0.0, b = 1.0;          // uniform on [a, b], a == b degenerate
  double x1 = 0.0, x2 = 1.0, p = 0.5;  // two_point: P(x1) = p

  static IidLaw uniform(double a, double b);
  static IidLaw two_point(double x1, double x2, double p);
};

EigenvalueVector eigenvalues_iid(std::size_t n, const IidLaw& law, Seed seed);

/// Plain-text eigenvalue file: one decimal real per line, '#' comments and
/// blank lines permitted. Non-finite values are rejected with a line number.
EigenvalueVector eigenvalues_from_file(const std::string& path);

}  // namespace ptlab

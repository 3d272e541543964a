#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ptlab {

/// Dense row-major matrix, minimal surface.
template <typename T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T* data() { return a_.data(); }
  const T* data() const { return a_.data(); }
  const T* row_ptr(std::size_t i) const { return a_.data() + i * cols_; }

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RealMat = Mat<double>;
using ComplexMat = Mat<std::complex<double>>;

/// Compensated (Kahan) accumulator.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

/// In-place QR orthonormalization of a square matrix: a is replaced by the Q
/// factor with each column rescaled so the corresponding diagonal of R is
/// real and positive. Returns false when a diagonal of R vanishes
/// (numerically rank-deficient input).
bool qr_positive_diagonal(RealMat& a);
bool qr_positive_diagonal(ComplexMat& a);

/// Eigenvalues of a symmetric tridiagonal matrix, ascending. Implicit-shift
/// QL without eigenvectors. `rel_tol` controls the off-diagonal deflation
/// threshold relative to the local matrix scale. Throws NumericError naming
/// the eigenvalue index if an eigenvalue fails to converge.
std::vector<double> tridiag_eigenvalues_ql(std::vector<double> diag,
                                           std::vector<double> offdiag,
                                           double rel_tol = 1e-12);

/// Householder reduction to symmetric tridiagonal form, eigenvalues only:
/// fills d (diagonal, size n) and e (off-diagonal, size n-1). The complex
/// overload produces the magnitudes of the (complex) off-diagonals, which
/// leaves the spectrum unchanged.
void householder_tridiagonal(RealMat a, std::vector<double>& d, std::vector<double>& e);
void householder_tridiagonal(ComplexMat a, std::vector<double>& d, std::vector<double>& e);

/// Dense symmetric / Hermitian eigenvalues, ascending: Householder reduction
/// followed by tridiagonal QL.
std::vector<double> symmetric_eigenvalues(const RealMat& a, double rel_tol = 1e-12);
std::vector<double> hermitian_eigenvalues(const ComplexMat& a, double rel_tol = 1e-12);

}  // namespace ptlab

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

// Keep BLAS sequential; replicate-level parallelism is handled upstream and
// reductions must not depend on a thread count.
extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace ptlab {

namespace {

struct BlasSingleThread {
  BlasSingleThread() {
    if (openblas_set_num_threads) openblas_set_num_threads(1);
  }
};
const BlasSingleThread blas_single_thread_init;

void check_square(std::size_t rows, std::size_t cols) {
  if (rows != cols) throw std::invalid_argument("matrix must be square");
}

}  // namespace

bool qr_positive_diagonal(RealMat& a) {
  check_square(a.rows(), a.cols());
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return true;
  std::vector<double> tau(static_cast<std::size_t>(n));
  lapack_int info = LAPACKE_dgeqrf(LAPACK_ROW_MAJOR, n, n, a.data(), n, tau.data());
  if (info != 0) throw NumericError("dgeqrf failed, info=" + std::to_string(info));
  std::vector<double> rdiag(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rdiag[i] = a(i, i);
    if (rdiag[i] == 0.0) return false;
  }
  info = LAPACKE_dorgqr(LAPACK_ROW_MAJOR, n, n, n, a.data(), n, tau.data());
  if (info != 0) throw NumericError("dorgqr failed, info=" + std::to_string(info));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (rdiag[j] < 0.0) {
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = -a(i, j);
    }
  }
  return true;
}

bool qr_positive_diagonal(ComplexMat& a) {
  check_square(a.rows(), a.cols());
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) return true;
  std::vector<std::complex<double>> tau(static_cast<std::size_t>(n));
  lapack_int info = LAPACKE_zgeqrf(LAPACK_ROW_MAJOR, n, n, a.data(), n, tau.data());
  if (info != 0) throw NumericError("zgeqrf failed, info=" + std::to_string(info));
  std::vector<std::complex<double>> phase(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::complex<double> r = a(i, i);
    const double mag = std::abs(r);
    if (mag == 0.0) return false;
    phase[i] = r / mag;
  }
  info = LAPACKE_zungqr(LAPACK_ROW_MAJOR, n, n, n, a.data(), n, tau.data());
  if (info != 0) throw NumericError("zungqr failed, info=" + std::to_string(info));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) *= phase[j];
  }
  return true;
}

std::vector<double> tridiag_eigenvalues_ql(std::vector<double> d,
                                           std::vector<double> e,
                                           double rel_tol) {
  const std::size_t n = d.size();
  if (n == 0) return {};
  if (e.size() != n - 1) {
    throw std::invalid_argument("tridiag: offdiag must have length n-1");
  }
  if (!(rel_tol > 0.0)) throw std::invalid_argument("tridiag: tol must be positive");
  const double eps = std::max(rel_tol, std::numeric_limits<double>::epsilon());
  e.push_back(0.0);

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 50) {
          throw NumericError("tridiagonal QL: no convergence for eigenvalue index " +
                             std::to_string(l));
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

template <typename T>
void householder_tridiagonal_impl(Mat<T> a, std::vector<double>& d, std::vector<double>& e) {
  check_square(a.rows(), a.cols());
  const std::size_t n = a.rows();
  d.assign(n, 0.0);
  e.assign(n >= 1 ? n - 1 : 0, 0.0);
  std::vector<T> v, p, w;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // trailing block size
    double nrm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) nrm2 += std::norm(a(i, k));
    const double nrm = std::sqrt(nrm2);
    if (nrm == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const T x0 = a(k + 1, k);
    T alpha;
    if constexpr (std::is_same_v<T, double>) {
      alpha = (x0 >= 0.0) ? -nrm : nrm;
    } else {
      const double x0m = std::abs(x0);
      alpha = (x0m == 0.0) ? T(-nrm) : T(-(x0 / x0m) * nrm);
    }
    v.assign(m, T(0));
    v[0] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i - k - 1] = a(i, k);
    double vn2 = 0.0;
    for (const T& x : v) vn2 += std::norm(x);
    const double vn = std::sqrt(vn2);
    for (T& x : v) x /= vn;

    // Similarity update of the trailing block by H = I - 2 v v*.
    p.assign(m, T(0));
    for (std::size_t i = 0; i < m; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < m; ++j) acc += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = 2.0 * acc;
    }
    double kappa = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if constexpr (std::is_same_v<T, double>) {
        kappa += v[i] * p[i];
      } else {
        kappa += (std::conj(v[i]) * p[i]).real();
      }
    }
    w.assign(m, T(0));
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kappa * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if constexpr (std::is_same_v<T, double>) {
          a(k + 1 + i, k + 1 + j) -= v[i] * w[j] + w[i] * v[j];
        } else {
          a(k + 1 + i, k + 1 + j) -= v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
        }
      }
    }
    if constexpr (std::is_same_v<T, double>) {
      e[k] = alpha;
    } else {
      e[k] = std::abs(alpha);
    }
  }
  if (n >= 2) {
    if constexpr (std::is_same_v<T, double>) {
      e[n - 2] = a(n - 1, n - 2);
    } else {
      e[n - 2] = std::abs(a(n - 1, n - 2));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, double>) {
      d[i] = a(i, i);
    } else {
      d[i] = a(i, i).real();
    }
  }
}

}  // namespace

void householder_tridiagonal(RealMat a, std::vector<double>& d, std::vector<double>& e) {
  householder_tridiagonal_impl<double>(std::move(a), d, e);
}

void householder_tridiagonal(ComplexMat a, std::vector<double>& d, std::vector<double>& e) {
  householder_tridiagonal_impl<std::complex<double>>(std::move(a), d, e);
}

std::vector<double> symmetric_eigenvalues(const RealMat& a, double rel_tol) {
  std::vector<double> d, e;
  householder_tridiagonal(a, d, e);
  return tridiag_eigenvalues_ql(std::move(d), std::move(e), rel_tol);
}

std::vector<double> hermitian_eigenvalues(const ComplexMat& a, double rel_tol) {
  std::vector<double> d, e;
  householder_tridiagonal(a, d, e);
  return tridiag_eigenvalues_ql(std::move(d), std::move(e), rel_tol);
}

}  // namespace ptlab

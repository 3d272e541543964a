#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "core/sampling.hpp"

namespace ptlab {

/// Test function f in one of three closed representations. Piecewise
/// constant steps use half-open intervals (a, b].
class TestFunction {
 public:
  enum class Kind { polynomial, step, chebyshev };

  struct Step {
    double a, b, level;
  };

  static TestFunction polynomial(std::vector<double> coeffs);        // c0 + c1 x + ...
  static TestFunction piecewise_constant(std::vector<Step> steps);   // a1 < b1 <= a2 < ...
  static TestFunction chebyshev(std::vector<double> coeffs);         // sum c_k T_k(x/2)

  /// Textual syntax: "poly:c0,c1,...", "step:a1,b1,g1;a2,b2,g2;...",
  /// "cheb:c0,c1,...".
  static TestFunction parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool smooth() const { return kind_ != Kind::step; }

  double operator()(double x) const;

  /// Analytic derivative; rejects piecewise-constant input.
  double derivative(double x) const;

  const std::vector<double>& coefficients() const { return coeffs_; }
  const std::vector<Step>& steps() const { return steps_; }

  std::string to_string() const;

 private:
  TestFunction() = default;
  Kind kind_ = Kind::polynomial;
  std::vector<double> coeffs_;
  std::vector<Step> steps_;
};

namespace semicircle {

constexpr double kLeft = -2.0;
constexpr double kRight = 2.0;

double density(double x);
double cdf(double s);
/// Inverse CDF by bisection to 1e-12.
double quantile(double u);

/// nu(f) for the semicircle law: Gauss-Chebyshev (second kind) after
/// x = 2 cos(theta), node count doubled from 256 until stable; piecewise
/// constant functions integrate exactly through the CDF.
double integral(const TestFunction& f);
double integral_sq(const TestFunction& f);  // nu(f^2)

}  // namespace semicircle

/// sigma0^2(f) = (2/beta) (nu(f^2) - nu(f)^2); requires nu_f2 >= nu_f^2 up to
/// 1e-12 slack, result clamped at 0.
double sigma0_sq(double nu_f, double nu_f2, BetaIndex beta);
double sigma0_sq(const TestFunction& f, BetaIndex beta);

/// Chebyshev coefficients c_0..c_K of f on [-2, 2] by discrete cosine
/// quadrature at 2K nodes; K doubles (up to 4096) until the tail satisfies
/// |c_K| <= 1e-10 max|c|.
std::vector<double> chebyshev_coeffs(const TestFunction& f, std::size_t K);

/// Limit variance of the centered linear eigenvalue statistic for the
/// Gaussian ensembles, computed two ways that must agree within
/// 1e-8 * max(1, |value|): a tensor quadrature of the double integral with
/// the diagonal handled through f', and the Chebyshev series identity
/// (1/(2 beta)) sum_k k c_k^2. Requires a C^1 representation.
double sigma1_sq_gaussian(const TestFunction& f, BetaIndex beta);
double sigma1_sq_gaussian_quadrature(const TestFunction& f, BetaIndex beta);
double sigma1_sq_gaussian_chebyshev(const TestFunction& f, BetaIndex beta);

}  // namespace ptlab

#include "core/testfn.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace ptlab {

namespace {

constexpr std::size_t kMaxPolyDegree = 32;
constexpr std::size_t kMaxChebCoeffs = 4097;
constexpr std::size_t kMaxQuadNodes = 8192;
constexpr double kPi = std::numbers::pi;

void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite coefficient");
  }
}

std::vector<double> parse_double_list(const std::string& text, char sep) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(sep, pos);
    const std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.empty()) throw std::invalid_argument("test function: empty number in '" + text + "'");
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
      throw std::invalid_argument("test function: cannot parse number '" + tok + "'");
    }
    out.push_back(x);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string format_double_list(const std::vector<double>& v, char sep) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
    if (i) out.push_back(sep);
    out += buf;
  }
  return out;
}

}  // namespace

TestFunction TestFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial: need at least one coefficient");
  if (coeffs.size() > kMaxPolyDegree + 1) {
    throw std::invalid_argument("polynomial: degree must be <= 32");
  }
  check_finite(coeffs, "polynomial");
  TestFunction f;
  f.kind_ = Kind::polynomial;
  f.coeffs_ = std::move(coeffs);
  return f;
}

TestFunction TestFunction::piecewise_constant(std::vector<Step> steps) {
  if (steps.empty()) throw std::invalid_argument("step function: need at least one interval");
  for (std::size_t m = 0; m < steps.size(); ++m) {
    const Step& s = steps[m];
    if (!std::isfinite(s.a) || !std::isfinite(s.b) || !std::isfinite(s.level)) {
      throw std::invalid_argument("step function: non-finite parameter");
    }
    if (!(s.a < s.b)) throw std::invalid_argument("step function: need a < b per interval");
    if (m > 0 && !(steps[m - 1].b <= s.a)) {
      throw std::invalid_argument("step function: intervals must be ordered and disjoint");
    }
  }
  TestFunction f;
  f.kind_ = Kind::step;
  f.steps_ = std::move(steps);
  return f;
}

TestFunction TestFunction::chebyshev(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("chebyshev: need at least one coefficient");
  if (coeffs.size() > kMaxChebCoeffs) {
    throw std::invalid_argument("chebyshev: too many coefficients");
  }
  check_finite(coeffs, "chebyshev");
  TestFunction f;
  f.kind_ = Kind::chebyshev;
  f.coeffs_ = std::move(coeffs);
  return f;
}

TestFunction TestFunction::parse(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("test function: expected 'poly:', 'step:' or 'cheb:' prefix in '" +
                                text + "'");
  }
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);
  if (head == "poly") return polynomial(parse_double_list(body, ','));
  if (head == "cheb") return chebyshev(parse_double_list(body, ','));
  if (head == "step") {
    std::vector<Step> steps;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const std::size_t next = body.find(';', pos);
      const std::string group = body.substr(pos, next == std::string::npos ? next : next - pos);
      const std::vector<double> abc = parse_double_list(group, ',');
      if (abc.size() != 3) {
        throw std::invalid_argument("step function: each group needs a,b,level");
      }
      steps.push_back(Step{abc[0], abc[1], abc[2]});
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return piecewise_constant(std::move(steps));
  }
  throw std::invalid_argument("test function: unknown representation '" + head + "'");
}

double TestFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::polynomial: {
      double acc = 0.0;
      for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
      return acc;
    }
    case Kind::step: {
      for (const Step& s : steps_) {
        if (x > s.a && x <= s.b) return s.level;
      }
      return 0.0;
    }
    case Kind::chebyshev: {
      const double u = 0.5 * x;
      const std::size_t m = coeffs_.size();
      if (m == 1) return coeffs_[0];
      double b1 = 0.0, b2 = 0.0;
      for (std::size_t k = m; k-- > 1;) {
        const double b0 = coeffs_[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
      }
      return coeffs_[0] + u * b1 - b2;
    }
  }
  return 0.0;
}

double TestFunction::derivative(double x) const {
  switch (kind_) {
    case Kind::polynomial: {
      double acc = 0.0;
      for (std::size_t i = coeffs_.size(); i-- > 1;) {
        acc = acc * x + static_cast<double>(i) * coeffs_[i];
      }
      return acc;
    }
    case Kind::chebyshev: {
      // f'(x) = (1/2) sum_k c_k k U_{k-1}(x/2)
      const double u = 0.5 * x;
      double acc = 0.0;
      double um2 = 0.0, um1 = 1.0;  // U_{-1}=0, U_0=1
      for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        acc += coeffs_[k] * static_cast<double>(k) * um1;
        const double u0 = 2.0 * u * um1 - um2;
        um2 = um1;
        um1 = u0;
      }
      return 0.5 * acc;
    }
    case Kind::step:
      throw std::invalid_argument("derivative: piecewise constant function is not C^1");
  }
  return 0.0;
}

std::string TestFunction::to_string() const {
  switch (kind_) {
    case Kind::polynomial:
      return "poly:" + format_double_list(coeffs_, ',');
    case Kind::chebyshev:
      return "cheb:" + format_double_list(coeffs_, ',');
    case Kind::step: {
      std::string out = "step:";
      for (std::size_t m = 0; m < steps_.size(); ++m) {
        if (m) out.push_back(';');
        out += format_double_list({steps_[m].a, steps_[m].b, steps_[m].level}, ',');
      }
      return out;
    }
  }
  return {};
}

namespace semicircle {

double density(double x) {
  if (x <= kLeft || x >= kRight) return 0.0;
  return std::sqrt(4.0 - x * x) / (2.0 * kPi);
}

double cdf(double s) {
  if (s <= kLeft) return 0.0;
  if (s >= kRight) return 1.0;
  return 0.5 + s * std::sqrt(4.0 - s * s) / (4.0 * kPi) + std::asin(0.5 * s) / kPi;
}

double quantile(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("quantile: u must be in [0,1]");
  if (u <= 0.0) return kLeft;
  if (u >= 1.0) return kRight;
  double lo = kLeft, hi = kRight;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < u) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

// Gauss-Chebyshev (second kind) for int g(x) dnu, exact for polynomial g of
// degree <= 2N-1 at N nodes.
template <typename G>
double gc2_pass(const G& g, std::size_t nodes) {
  KahanSum acc;
  const double h = kPi / static_cast<double>(nodes + 1);
  for (std::size_t i = 1; i <= nodes; ++i) {
    const double theta = h * static_cast<double>(i);
    const double s = std::sin(theta);
    acc.add(s * s * g(2.0 * std::cos(theta)));
  }
  return 2.0 / static_cast<double>(nodes + 1) * acc.value();
}

template <typename G>
double gc2_integral(const G& g) {
  std::size_t nodes = 256;
  double prev = gc2_pass(g, nodes);
  while (nodes < kMaxQuadNodes) {
    nodes *= 2;
    const double cur = gc2_pass(g, nodes);
    if (std::fabs(cur - prev) < 1e-10 * std::max(1.0, std::fabs(cur))) return cur;
    prev = cur;
  }
  throw NumericError("semicircle integral: quadrature did not stabilize");
}

}  // namespace

double integral(const TestFunction& f) {
  if (f.kind() == TestFunction::Kind::step) {
    double acc = 0.0;
    for (const auto& s : f.steps()) acc += s.level * (cdf(s.b) - cdf(s.a));
    return acc;
  }
  return gc2_integral([&](double x) { return f(x); });
}

double integral_sq(const TestFunction& f) {
  if (f.kind() == TestFunction::Kind::step) {
    double acc = 0.0;
    for (const auto& s : f.steps()) acc += s.level * s.level * (cdf(s.b) - cdf(s.a));
    return acc;
  }
  return gc2_integral([&](double x) {
    const double v = f(x);
    return v * v;
  });
}

}  // namespace semicircle

double sigma0_sq(double nu_f, double nu_f2, BetaIndex beta) {
  const double var = nu_f2 - nu_f * nu_f;
  if (var < -1e-12) {
    throw std::invalid_argument("sigma0_sq: nu(f^2) < nu(f)^2 beyond tolerance");
  }
  return (2.0 / beta.beta) * std::max(var, 0.0);
}

double sigma0_sq(const TestFunction& f, BetaIndex beta) {
  return sigma0_sq(semicircle::integral(f), semicircle::integral_sq(f), beta);
}

std::vector<double> chebyshev_coeffs(const TestFunction& f, std::size_t K) {
  if (K < 1) throw std::invalid_argument("chebyshev_coeffs: K must be >= 1");
  for (;;) {
    const std::size_t nodes = 2 * K;
    const double h = kPi / static_cast<double>(nodes);
    std::vector<double> fx(nodes), theta(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
      theta[j] = h * (static_cast<double>(j) + 0.5);
      fx[j] = f(2.0 * std::cos(theta[j]));
    }
    std::vector<double> c(K + 1, 0.0);
    for (std::size_t j = 0; j < nodes; ++j) {
      // cos(k theta) by recurrence over k
      const double ct = std::cos(theta[j]);
      double ck = 1.0, ckm1 = ct;  // cos(0), placeholder
      double prev = ct, prev2 = 1.0;
      c[0] += fx[j];
      if (K >= 1) c[1] += fx[j] * ct;
      for (std::size_t k = 2; k <= K; ++k) {
        const double cur = 2.0 * ct * prev - prev2;
        c[k] += fx[j] * cur;
        prev2 = prev;
        prev = cur;
      }
      (void)ck;
      (void)ckm1;
    }
    double cmax = 0.0;
    for (std::size_t k = 0; k <= K; ++k) {
      c[k] *= (k == 0 ? 1.0 : 2.0) / static_cast<double>(nodes);
      cmax = std::max(cmax, std::fabs(c[k]));
    }
    if (std::fabs(c[K]) <= 1e-10 * cmax) return c;
    if (K >= 4096) throw NumericError("chebyshev_coeffs: tail criterion unmet at K=4096");
    K = std::min<std::size_t>(2 * K, 4096);
  }
}

double sigma1_sq_gaussian_chebyshev(const TestFunction& f, BetaIndex beta) {
  if (!f.smooth()) {
    throw std::invalid_argument("sigma1_sq: unsupported for piecewise constant f (requires C^1)");
  }
  std::size_t k0 = 64;
  if (f.kind() == TestFunction::Kind::chebyshev) {
    while (k0 < f.coefficients().size() && k0 < 4096) k0 *= 2;
  }
  const std::vector<double> c = chebyshev_coeffs(f, k0);
  KahanSum acc;
  for (std::size_t k = 1; k < c.size(); ++k) acc.add(static_cast<double>(k) * c[k] * c[k]);
  return acc.value() / (2.0 * beta.beta);
}

namespace {

double sigma1_quad_pass(const TestFunction& f, BetaIndex beta, std::size_t nodes) {
  const double h = kPi / static_cast<double>(nodes);
  std::vector<double> x(nodes), fx(nodes), dfx(nodes), cost(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    const double theta = h * (static_cast<double>(i) + 0.5);
    cost[i] = std::cos(theta);
    x[i] = 2.0 * cost[i];
    fx[i] = f(x[i]);
    dfx[i] = f.derivative(x[i]);
  }
  KahanSum acc;
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = 0; j < nodes; ++j) {
      double d;
      if (i == j) {
        d = dfx[i];
      } else {
        d = (fx[i] - fx[j]) / (x[i] - x[j]);
      }
      acc.add(d * d * (4.0 - 4.0 * cost[i] * cost[j]));
    }
  }
  const double n2 = static_cast<double>(nodes) * static_cast<double>(nodes);
  return acc.value() / (2.0 * beta.beta * n2);
}

}  // namespace

double sigma1_sq_gaussian_quadrature(const TestFunction& f, BetaIndex beta) {
  if (!f.smooth()) {
    throw std::invalid_argument("sigma1_sq: unsupported for piecewise constant f (requires C^1)");
  }
  std::size_t nodes = 128;
  if (f.kind() == TestFunction::Kind::chebyshev) {
    while (nodes < 2 * f.coefficients().size() && nodes < 2048) nodes *= 2;
  }
  double prev = sigma1_quad_pass(f, beta, nodes);
  while (nodes < 2048) {
    nodes *= 2;
    const double cur = sigma1_quad_pass(f, beta, nodes);
    if (std::fabs(cur - prev) < 1e-10 * std::max(1.0, std::fabs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

double sigma1_sq_gaussian(const TestFunction& f, BetaIndex beta) {
  const double quad = sigma1_sq_gaussian_quadrature(f, beta);
  const double cheb = sigma1_sq_gaussian_chebyshev(f, beta);
  if (std::fabs(quad - cheb) > 1e-8 * std::max(1.0, std::fabs(cheb))) {
    throw NumericError("sigma1_sq: quadrature and Chebyshev routes disagree");
  }
  return cheb;
}

}  // namespace ptlab

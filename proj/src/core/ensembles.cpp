#include "core/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/testfn.hpp"

namespace ptlab {

TridiagonalMatrix sample_beta_hermite_tridiag(std::size_t n, double beta, Seed seed) {
  if (n == 0) throw std::invalid_argument("beta_hermite: n must be >= 1");
  if (!(beta > 0.0)) throw std::invalid_argument("beta_hermite: beta must be positive");
  Rng rng(seed);
  TridiagonalMatrix m;
  m.diag.resize(n);
  m.offdiag.resize(n - 1);
  const double nb = static_cast<double>(n) * beta;
  const double diag_sd = std::sqrt(2.0 / nb);
  const double off_scale = 1.0 / std::sqrt(nb);
  for (std::size_t i = 0; i < n; ++i) m.diag[i] = diag_sd * rng.normal();
  for (std::size_t k = 1; k < n; ++k) {
    m.offdiag[k - 1] = off_scale * rng.chi(beta * static_cast<double>(n - k));
  }
  return m;
}

RealMat sample_dense_goe(std::size_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("dense_goe: n must be >= 1");
  Rng rng(seed);
  RealMat a(n, n);
  const double diag_sd = std::sqrt(2.0 / static_cast<double>(n));
  const double off_sd = std::sqrt(1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = diag_sd * rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = off_sd * rng.normal();
      a(i, j) = x;
      a(j, i) = x;
    }
  }
  return a;
}

ComplexMat sample_dense_gue(std::size_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("dense_gue: n must be >= 1");
  Rng rng(seed);
  ComplexMat a(n, n);
  const double diag_sd = std::sqrt(1.0 / static_cast<double>(n));
  const double off_sd = std::sqrt(0.5 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = diag_sd * rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::complex<double> z(off_sd * rng.normal(), off_sd * rng.normal());
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

EigenvalueVector tridiag_eigenvalues(const TridiagonalMatrix& m, double rel_tol) {
  EigenvalueVector ev;
  ev.values = tridiag_eigenvalues_ql(m.diag, m.offdiag, rel_tol);
  ev.source = EigenSource::beta_hermite;
  return ev;
}

EigenvalueVector semicircle_quantiles(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quantiles: n must be >= 1");
  EigenvalueVector ev;
  ev.source = EigenSource::quantile;
  ev.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
    ev.values[k] = semicircle::quantile(u);
  }
  return ev;
}

IidLaw IidLaw::uniform(double a, double b) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("iid uniform: need finite a <= b");
  }
  IidLaw law;
  law.kind = Kind::uniform;
  law.a = a;
  law.b = b;
  return law;
}

IidLaw IidLaw::two_point(double x1, double x2, double p) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || x1 == x2) {
    throw std::invalid_argument("iid two_point: atoms must be finite and distinct");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("iid two_point: p must be in [0,1]");
  IidLaw law;
  law.kind = Kind::two_point;
  law.x1 = x1;
  law.x2 = x2;
  law.p = p;
  return law;
}

EigenvalueVector eigenvalues_iid(std::size_t n, const IidLaw& law, Seed seed) {
  if (n == 0) throw std::invalid_argument("iid: n must be >= 1");
  Rng rng(seed);
  EigenvalueVector ev;
  ev.source = EigenSource::iid;
  ev.values.resize(n);
  for (auto& x : ev.values) {
    if (law.kind == IidLaw::Kind::uniform) {
      x = law.a + (law.b - law.a) * rng.uniform01();
    } else {
      x = (rng.uniform01() < law.p) ? law.x1 : law.x2;
    }
  }
  std::sort(ev.values.begin(), ev.values.end());
  return ev;
}

EigenvalueVector eigenvalues_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open eigenvalue file: " + path);
  EigenvalueVector ev;
  ev.source = EigenSource::file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    const char* begin = line.c_str() + start;
    char* end = nullptr;
    const double x = std::strtod(begin, &end);
    if (end == begin) {
      throw IoError("eigenvalue file " + path + ": parse error at line " + std::to_string(lineno));
    }
    while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
    if (*end != '\0') {
      throw IoError("eigenvalue file " + path + ": trailing garbage at line " + std::to_string(lineno));
    }
    if (!std::isfinite(x)) {
      throw IoError("eigenvalue file " + path + ": non-finite value at line " + std::to_string(lineno));
    }
    ev.values.push_back(x);
  }
  if (ev.values.empty()) throw IoError("eigenvalue file " + path + ": no eigenvalues");
  std::sort(ev.values.begin(), ev.values.end());
  return ev;
}

}  // namespace ptlab

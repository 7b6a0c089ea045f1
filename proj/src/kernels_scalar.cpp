#include "qpsl/kernels.hpp"

#include <cmath>

namespace qpsl::kernels::scalar {

void vsin(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::sin(x[i]);
}

void vsincos(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc = std::fma(a[i], b[i], acc);
  return acc;
}

double sum(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double cu = c * u[i];
    double* row = f + i * ld;
    for (std::size_t j = 0; j < n; ++j) row[j] = std::fma(cu, v[j], row[j]);
  }
}

void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double si = s[i];
    const double ci = c[i];
    double* row = p + i * ld;
    const double* rmi = rm + i * ld;
    const double* rpi = rp + i * ld;
    for (std::size_t j = 0; j < n; ++j) {
      const double sd = si * c[j] - ci * s[j];
      const double ss = si * c[j] + ci * s[j];
      row[j] = 0.5 * (sd * rmi[j] - ss * rpi[j]);
    }
  }
}

}  // namespace qpsl::kernels::scalar

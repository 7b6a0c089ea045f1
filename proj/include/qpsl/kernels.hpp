#pragma once

// Runtime-dispatched arithmetic kernels.  Every routine has a scalar
// reference implementation and (on x86-64 with AVX2) a vectorized variant;
// the active backend is chosen once at startup from CPUID and can be forced
// with the QPSL_SIMD environment variable ("scalar" or "avx2") or from code.
// The SIMD variants are equivalence-tested against the scalar references.

#include <cstddef>

namespace qpsl::kernels {

enum class Backend { scalar, avx2 };

/// Backend selected for this process (after env override).
Backend active_backend();

/// Force a backend; throws std::invalid_argument if it is unavailable.
void force_backend(Backend b);

/// True if the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

// y[i] = sin(x[i]); valid for |x| <= 2^24 (Cody-Waite reduced range).
void vsin(const double* x, double* y, std::size_t n);

// s[i] = sin(x[i]), c[i] = cos(x[i]); same domain as vsin.
void vsincos(const double* x, double* s, double* c, std::size_t n);

// Dot product sum_i a[i]*b[i].
double dot(const double* a, const double* b, std::size_t n);

// Plain sum.
double sum(const double* a, std::size_t n);

// y[i] += alpha * x[i].
void axpy(double alpha, const double* x, double* y, std::size_t n);

// F[i*ld + j] += c * u[i] * v[j]  (rank-1 update on a row-major block).
void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n);

// Trigonometric Gram block: with s[i] = sin(mu_i * x), c[i] = cos(mu_i * x),
//   P[i*ld+j] = 0.5 * ((s_i c_j - c_i s_j) * rm[i*ld+j]
//                    - (s_i c_j + c_i s_j) * rp[i*ld+j])
// which equals int_0^x sin(mu_i t) sin(mu_j t) dt when rm = 1/(mu_i - mu_j)
// and rp = 1/(mu_i + mu_j).  Entries where rm was stored as 0 must be fixed
// up by the caller (coincident frequencies).
void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n);

// out[i] = sin(rho * (t0 + i*dt)); thin wrapper over vsin.
void sin_table(double rho, double t0, double dt, std::size_t n, double* out);

// Scalar reference entry points (always available; used by equivalence tests).
namespace scalar {
void vsin(const double* x, double* y, std::size_t n);
void vsincos(const double* x, double* s, double* c, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n);
void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n);
}  // namespace scalar

#if defined(QPSL_BUILD_AVX2)
namespace avx2 {
void vsin(const double* x, double* y, std::size_t n);
void vsincos(const double* x, double* s, double* c, std::size_t n);
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n);
void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n);
}  // namespace avx2
#endif

}  // namespace qpsl::kernels

#include "qpsl/kernels.hpp"

#include <immintrin.h>

#include <cmath>

// AVX2 variants.  The vector sine/cosine uses the classic Cody-Waite
// three-term pi/2 reduction with the fdlibm kernel polynomials, accurate to
// a couple of ulp for |x| <= 2^24, which covers every argument this library
// produces (phases bounded by a few thousand).

namespace qpsl::kernels::avx2 {

namespace {

constexpr double kInvPio2 = 6.36619772367581382433e-01;  // 2/pi
constexpr double kPio2Hi = 1.57079632673412561417e+00;   // high 33 bits of pi/2
constexpr double kPio2Mid = 6.07710050630396597660e-11;  // next 33 bits
constexpr double kPio2Lo = 2.02226624879595063154e-21;   // tail

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

struct SinCosV {
  __m256d s;
  __m256d c;
};

// sin and cos of four doubles at once.
inline SinCosV sincos4(__m256d x) {
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kInvPio2)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Mid), r);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);

  // sin kernel: r + r^3 * (S1 + z*(...))
  __m256d sp = _mm256_set1_pd(kS6);
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS5));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS4));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS3));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS2));
  sp = _mm256_fmadd_pd(sp, z, _mm256_set1_pd(kS1));
  const __m256d sinr = _mm256_fmadd_pd(_mm256_mul_pd(z, r), sp, r);

  // cos kernel: 1 - z/2 + z^2*(C1 + z*(...))
  __m256d cp = _mm256_set1_pd(kC6);
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC5));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC4));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC3));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC2));
  cp = _mm256_fmadd_pd(cp, z, _mm256_set1_pd(kC1));
  __m256d cosr = _mm256_fmadd_pd(_mm256_mul_pd(z, z), cp,
                                 _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5),
                                                  _mm256_set1_pd(1.0)));

  // Quadrant selection from k mod 4.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  const __m256i kq = _mm256_cvtepi32_epi64(ki);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i two = _mm256_set1_epi64x(2);
  const __m256d swap =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(kq, one), one));
  const __m256d sflip =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(kq, two), two));
  const __m256d signbit = _mm256_set1_pd(-0.0);

  // q&1: sin<->cos swap; q&2: sign flip of sin; cos sign flips when
  // (q&1) xor-combined with q&2 demands it: cos quadrant signs are
  // (+,-,-,+) while the swapped magnitude handles q&1.
  __m256d smag = _mm256_blendv_pd(sinr, cosr, swap);
  __m256d cmag = _mm256_blendv_pd(cosr, sinr, swap);
  __m256d sres = _mm256_xor_pd(smag, _mm256_and_pd(sflip, signbit));
  const __m256d cflipmask = _mm256_xor_pd(_mm256_and_pd(swap, signbit),
                                          _mm256_and_pd(sflip, signbit));
  __m256d cres = _mm256_xor_pd(cmag, cflipmask);
  return {sres, cres};
}

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

void vsin(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const SinCosV sc = sincos4(_mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, sc.s);
  }
  for (; i < n; ++i) y[i] = std::sin(x[i]);
}

void vsincos(const double* x, double* s, double* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const SinCosV sc = sincos4(_mm256_loadu_pd(x + i));
    _mm256_storeu_pd(s + i, sc.s);
    _mm256_storeu_pd(c + i, sc.c);
  }
  for (; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc = std::fma(a[i], b[i], acc);
  return acc;
}

double sum(const double* a, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
  double acc = hsum(acc0);
  for (; i < n; ++i) acc += a[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const double cu = c * u[i];
    const __m256d vcu = _mm256_set1_pd(cu);
    double* row = f + i * ld;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d r = _mm256_fmadd_pd(vcu, _mm256_loadu_pd(v + j), _mm256_loadu_pd(row + j));
      _mm256_storeu_pd(row + j, r);
    }
    for (; j < n; ++j) row[j] = std::fma(cu, v[j], row[j]);
  }
}

void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d si = _mm256_set1_pd(s[i]);
    const __m256d ci = _mm256_set1_pd(c[i]);
    double* row = p + i * ld;
    const double* rmi = rm + i * ld;
    const double* rpi = rp + i * ld;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d sj = _mm256_loadu_pd(s + j);
      const __m256d cj = _mm256_loadu_pd(c + j);
      const __m256d sicj = _mm256_mul_pd(si, cj);
      const __m256d cisj = _mm256_mul_pd(ci, sj);
      const __m256d sd = _mm256_sub_pd(sicj, cisj);
      const __m256d ss = _mm256_add_pd(sicj, cisj);
      const __m256d val = _mm256_mul_pd(
          half, _mm256_fmsub_pd(sd, _mm256_loadu_pd(rmi + j),
                                _mm256_mul_pd(ss, _mm256_loadu_pd(rpi + j))));
      _mm256_storeu_pd(row + j, val);
    }
    for (; j < n; ++j) {
      const double sd = s[i] * c[j] - c[i] * s[j];
      const double ss = s[i] * c[j] + c[i] * s[j];
      row[j] = 0.5 * (sd * rmi[j] - ss * rpi[j]);
    }
  }
}

}  // namespace qpsl::kernels::avx2

#include "qpsl/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace qpsl::kernels {

namespace {

struct Table {
  void (*vsin)(const double*, double*, std::size_t);
  void (*vsincos)(const double*, double*, double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*outer_add)(double*, std::size_t, double, const double*, std::size_t,
                    const double*, std::size_t);
  void (*gram_sinsin)(double*, std::size_t, const double*, const double*,
                      const double*, const double*, std::size_t);
};

constexpr Table kScalarTable = {
    scalar::vsin,  scalar::vsincos,  scalar::dot,        scalar::sum,
    scalar::axpy,  scalar::outer_add, scalar::gram_sinsin};

#if defined(QPSL_BUILD_AVX2)
constexpr Table kAvx2Table = {
    avx2::vsin,  avx2::vsincos,  avx2::dot,        avx2::sum,
    avx2::axpy,  avx2::outer_add, avx2::gram_sinsin};
#endif

bool cpu_has_avx2() {
#if defined(QPSL_BUILD_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct State {
  Backend backend = Backend::scalar;
  const Table* table = &kScalarTable;
};

State make_initial_state() {
  State st;
#if defined(QPSL_BUILD_AVX2)
  if (cpu_has_avx2()) {
    st.backend = Backend::avx2;
    st.table = &kAvx2Table;
  }
#endif
  if (const char* env = std::getenv("QPSL_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) {
      st.backend = Backend::scalar;
      st.table = &kScalarTable;
    }
#if defined(QPSL_BUILD_AVX2)
    else if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) {
      st.backend = Backend::avx2;
      st.table = &kAvx2Table;
    }
#endif
  }
  return st;
}

State& state() {
  static State st = make_initial_state();
  return st;
}

}  // namespace

Backend active_backend() { return state().backend; }

bool avx2_available() { return cpu_has_avx2(); }

void force_backend(Backend b) {
  if (b == Backend::scalar) {
    state() = {Backend::scalar, &kScalarTable};
    return;
  }
#if defined(QPSL_BUILD_AVX2)
  if (b == Backend::avx2 && cpu_has_avx2()) {
    state() = {Backend::avx2, &kAvx2Table};
    return;
  }
#endif
  throw std::invalid_argument("requested kernel backend is unavailable");
}

void vsin(const double* x, double* y, std::size_t n) { state().table->vsin(x, y, n); }

void vsincos(const double* x, double* s, double* c, std::size_t n) {
  state().table->vsincos(x, s, c, n);
}

double dot(const double* a, const double* b, std::size_t n) {
  return state().table->dot(a, b, n);
}

double sum(const double* a, std::size_t n) { return state().table->sum(a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  state().table->axpy(alpha, x, y, n);
}

void outer_add(double* f, std::size_t ld, double c, const double* u,
               std::size_t m, const double* v, std::size_t n) {
  state().table->outer_add(f, ld, c, u, m, v, n);
}

void gram_sinsin(double* p, std::size_t ld, const double* s, const double* c,
                 const double* rm, const double* rp, std::size_t n) {
  state().table->gram_sinsin(p, ld, s, c, rm, rp, n);
}

void sin_table(double rho, double t0, double dt, std::size_t n, double* out) {
  std::vector<double> args(n);
  for (std::size_t i = 0; i < n; ++i) args[i] = rho * (t0 + static_cast<double>(i) * dt);
  vsin(args.data(), out, n);
}

}  // namespace qpsl::kernels

#include "qpsl/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qpsl/common.hpp"

namespace qpsl {

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << "condition " << it.condition << ": " << (it.pass ? "pass" : "FAIL");
    if (!it.pass && it.index > 0) os << " at n=" << it.index;
    if (!it.pass && !it.message.empty()) os << " (" << it.message << ")";
    os << '\n';
  }
  return os.str();
}

double l21_norm(std::span<const double> seq) {
  double acc = 0.0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const double w = static_cast<double>(i + 1) * std::abs(seq[i]);
    acc += w * w;
  }
  return std::sqrt(acc);
}

double l2_norm(std::span<const double> seq) {
  double acc = 0.0;
  for (double v : seq) acc += v * v;
  return std::sqrt(acc);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  static const unsigned threads = [] {
    if (const char* env = std::getenv("QPSL_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 1) return static_cast<unsigned>(v);
    }
    return 1u;
  }();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned nw = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (unsigned w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += nw) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

double trapezoid(std::span<const double> samples) {
  const std::size_t g = samples.size();
  if (g < 2) return 0.0;
  double acc = 0.5 * (samples[0] + samples[g - 1]);
  for (std::size_t i = 1; i + 1 < g; ++i) acc += samples[i];
  return acc / static_cast<double>(g - 1);
}

Potential make_potential(std::vector<double> samples) {
  if (samples.size() < 3) throw Error("potential grid must have at least 3 points");
  for (double v : samples)
    if (!std::isfinite(v)) throw Error("potential samples must be finite");
  Potential q;
  q.samples = std::move(samples);
  q.omega = 0.5 * trapezoid(q.samples);
  return q;
}

Potential make_potential(const std::function<double(double)>& f, std::size_t grid_size) {
  std::vector<double> s(grid_size);
  const double dx = 1.0 / static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) s[i] = f(static_cast<double>(i) * dx);
  return make_potential(std::move(s));
}

Potential zero_potential(std::size_t grid_size) {
  return make_potential(std::vector<double>(grid_size, 0.0));
}

Potential constant_potential(double c, std::size_t grid_size) {
  return make_potential(std::vector<double>(grid_size, c));
}

double potential_value(const Potential& q, double x) {
  const std::size_t g = q.grid_size();
  if (x <= 0.0) return q.samples.front();
  if (x >= 1.0) return q.samples.back();
  const double u = x * static_cast<double>(g - 1);
  const auto i = static_cast<std::size_t>(u);
  const double f = u - static_cast<double>(i);
  return q.samples[i] * (1.0 - f) + q.samples[i + 1] * f;
}

Potential shifted_potential(const Potential& q, double c) {
  std::vector<double> s = q.samples;
  for (double& v : s) v -= c;
  return make_potential(std::move(s));
}

double l2_grid_norm(std::span<const double> samples) {
  std::vector<double> sq(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) sq[i] = samples[i] * samples[i];
  return std::sqrt(std::max(0.0, trapezoid(sq)));
}

double l2_grid_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("grid size mismatch");
  std::vector<double> sq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sq[i] = d * d;
  }
  return std::sqrt(std::max(0.0, trapezoid(sq)));
}

BoundaryParams derived_boundary(double a, double h, double omega) {
  if (a == 0.0 || a == 1.0 || a == -1.0)
    throw Error("boundary parameter a must avoid {-1, 0, 1}");
  if (!std::isfinite(a) || !std::isfinite(h)) throw Error("boundary parameters must be finite");
  BoundaryParams bp;
  bp.a = a;
  bp.h = h;
  bp.a_plus = 0.5 * (a + 1.0 / a);
  bp.a_minus = 0.5 * (a - 1.0 / a);
  bp.b = a * h + 2.0 * bp.a_plus * omega;
  return bp;
}

double boundary_a_from_plus(double a_plus, int sign_a_minus) {
  const double disc = a_plus * a_plus - 1.0;
  if (disc < 0.0) throw Error("inconsistent data: |a_plus| < 1");
  return a_plus + static_cast<double>(sign_a_minus) * std::sqrt(disc);
}

DirichletSpectralData make_dirichlet_data(std::vector<double> rho, std::vector<double> M) {
  if (rho.size() != M.size()) throw Error("rho/M length mismatch");
  DirichletSpectralData d;
  d.alpha.resize(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i] == 0.0) throw Error("Weyl sequence entries must be nonzero");
    d.alpha[i] = 1.0 / M[i];
  }
  d.rho = std::move(rho);
  d.M = std::move(M);
  return d;
}

}  // namespace qpsl

#pragma once

// Domain types of the quasiperiodic Sturm-Liouville toolkit.  All types are
// plain values, immutable by convention after construction, and safe to share
// across threads.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qpsl/common.hpp"

namespace qpsl {

inline constexpr std::size_t kDefaultGrid = 1025;  // 2^10 + 1
inline constexpr std::size_t kDefaultN = 64;       // sequence prefix length

/// Real potential q sampled on a uniform grid over [0,1] (endpoints
/// included).  `omega` caches (1/2) int_0^1 q dx by the trapezoid rule.
struct Potential {
  std::vector<double> samples;
  double omega = 0.0;

  std::size_t grid_size() const { return samples.size(); }
  double dx() const { return 1.0 / static_cast<double>(samples.size() - 1); }
};

Potential make_potential(std::vector<double> samples);
Potential make_potential(const std::function<double(double)>& f,
                         std::size_t grid_size = kDefaultGrid);
Potential zero_potential(std::size_t grid_size = kDefaultGrid);
Potential constant_potential(double c, std::size_t grid_size = kDefaultGrid);

/// q(x) by linear interpolation between samples.
double potential_value(const Potential& q, double x);

/// q - c (new potential, omega recomputed).
Potential shifted_potential(const Potential& q, double c);

/// L2(0,1) norm of the difference of two equally sized sample sets.
double l2_grid_norm(std::span<const double> samples);
double l2_grid_distance(std::span<const double> a, std::span<const double> b);

/// Trapezoid integral over [0,1] of uniform samples.
double trapezoid(std::span<const double> samples);

/// Boundary parameters a, h together with the derived constants
/// a_pm = (a -+... ) and b = a h + 2 a_+ omega.
struct BoundaryParams {
  double a = 0.0;
  double h = 0.0;
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b = 0.0;
};

/// Throws Error for the excluded values a in {-1, 0, 1}.
BoundaryParams derived_boundary(double a, double h, double omega);

/// a from (a_plus, sign of a_minus); inverse of the derivation above.
double boundary_a_from_plus(double a_plus, int sign_a_minus);

/// Entire-function data of the discriminant:
///   d(rho) = 2 a_+ cos rho + b sin(rho)/rho + (1/rho) int_0^1 D(t) sin(rho t) dt
/// with D held as uniform grid samples on [0,1].
struct DiscriminantForm {
  double a_plus = 0.0;
  double b = 0.0;
  std::vector<double> D;

  std::size_t grid_size() const { return D.size(); }
};

/// Spectral data of the quasiperiodic problem: the discriminant form, the
/// Dirichlet square roots, and the sign sequence.  `d_at_rho`, when
/// non-empty, carries sampled values of d at the rho_n and takes precedence
/// over evaluating `dform` there (sample-based data input).
struct QPSpectralData {
  DiscriminantForm dform;
  std::vector<double> rho;
  std::vector<int> sigma;
  double kappa_tail_norm = 0.0;
  std::vector<double> d_at_rho;

  std::size_t size() const { return rho.size(); }
};

/// Dirichlet spectral data {rho_n, M_n}; alpha_n = 1/M_n are the weights.
struct DirichletSpectralData {
  std::vector<double> rho;
  std::vector<double> M;
  std::vector<double> alpha;
  double eta_tail_norm = 0.0;

  std::size_t size() const { return rho.size(); }
};

DirichletSpectralData make_dirichlet_data(std::vector<double> rho,
                                          std::vector<double> M);

/// Quasiperiodic eigenvalue square roots: nu_0 and the paired sequences
/// nu_n^-/nu_n^+ located near 2 pi n -+ theta.
struct QPEigenvalues {
  double nu0 = 0.0;
  std::vector<double> nu_minus;
  std::vector<double> nu_plus;
  double theta = 0.0;

  std::size_t pairs() const { return nu_plus.size(); }
};

/// Parameters of the admissible-data class S_{Omega,delta}(a, h, omega,
/// {sigma_n}).  `sigma` is a finite prefix; beyond it the sequence is taken
/// as (-1)^n sign(a_-).
struct StabilityClassParams {
  double Omega = 0.0;
  double delta = 0.0;
  double a = 0.0;
  double h = 0.0;
  double omega = 0.0;
  std::vector<int> sigma;
};

}  // namespace qpsl

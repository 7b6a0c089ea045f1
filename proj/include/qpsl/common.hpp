#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpsl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite state encountered while propagating the ODE system.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// A root bracket could not be established or refined.
class BracketError : public Error {
 public:
  BracketError(const std::string& what, int index) : Error(what), index(index) {}
  int index;
};

/// Spectral data violates a characterization condition.  `step` is the
/// reconstruction-algorithm step (1-6, 0 = pre-validation), `condition` the
/// violated condition number of the characterization (0 = none), `index` the
/// offending sequence index (0 = not index-specific).
class SolverError : public Error {
 public:
  SolverError(const std::string& what, int step, int condition, int index)
      : Error(what), step(step), condition(condition), index(index) {}
  int step;
  int condition;
  int index;
};

struct ValidationItem {
  int condition = 0;
  bool pass = true;
  int index = 0;  // first offending index (1-based), 0 if n/a
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationItem> items;

  bool ok() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  bool passed(int condition) const {
    for (const auto& it : items)
      if (it.condition == condition) return it.pass;
    return false;
  }
  const ValidationItem* find(int condition) const {
    for (const auto& it : items)
      if (it.condition == condition) return &it;
    return nullptr;
  }
  std::string summary() const;
};

/// Weighted sequence norm (sum_n (n |a_n|)^2)^(1/2), indices from 1.
double l21_norm(std::span<const double> seq);

/// Plain l2 norm of a sequence.
double l2_norm(std::span<const double> seq);

/// Run fn(i) for i in [0, n).  Uses QPSL_THREADS workers when > 1; the
/// default is serial execution, which keeps outputs byte-reproducible.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qpsl

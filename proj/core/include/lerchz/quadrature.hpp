#pragma once

// Tanh-sinh (double exponential) quadrature on finite intervals. Nodes next
// to an endpoint are formed from their exact distance to it, so integrable
// algebraic endpoint singularities are resolved.

#include <functional>

#include "lerchz/numeric.hpp"

namespace lerchz {

struct QuadratureOptions {
  double target = 0;      // absolute accuracy; 0 means 10^(5 - working digits)
  unsigned max_level = 12;  // step size 2^-level
};

struct QuadratureResult {
  ComplexApprox value;
  unsigned level = 0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<Complex(const Real&)>;

// Integrates f over [a, b]. The error estimate is the difference between
// the last two levels plus the truncation of the node range; it relies on
// the double exponential convergence rate rather than a proof.
QuadratureResult tanh_sinh(const Integrand& f, const Real& a, const Real& b, const QuadratureOptions& options = {});

}  // namespace lerchz

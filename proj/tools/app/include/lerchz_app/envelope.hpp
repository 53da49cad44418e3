#pragma once

// Envelope fits for asymptotic sweeps: residual <= C * shape, with C taken
// from the smallest part of the sweep and required to hold on the rest.

#include <cstdint>
#include <vector>

namespace lerchz::app {

struct EnvelopePoint {
  double size = 0;  // sweep parameter, e.g. ell or q
  double residual = 0;
  double shape = 0;
};

struct EnvelopeFit {
  double fitted_c = 0;  // max residual/shape over the smallest fraction of sizes
  double sup_c = 0;     // max residual/shape over all points
  std::vector<bool> within;  // residual <= fitted_c * shape, in input order
  std::int64_t failures = 0;
  double residual_slope = 0;  // least-squares slope of log residual against log size
};

EnvelopeFit fit_envelope(const std::vector<EnvelopePoint>& points, double fraction = 0.25);

// Least-squares slope of log y against log x over pairs with x, y > 0.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace lerchz::app

#include "lerchz_app/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lerchz::app {

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) continue;
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nan("");
  const double d = static_cast<double>(n) * sxx - sx * sx;
  if (d == 0) return std::nan("");
  return (static_cast<double>(n) * sxy - sx * sy) / d;
}

EnvelopeFit fit_envelope(const std::vector<EnvelopePoint>& points, double fraction) {
  EnvelopeFit out;
  if (points.empty()) return out;
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a].size < points[b].size; });
  const std::size_t head =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(points.size()))), 1,
                              points.size());
  auto ratio = [&](std::size_t i) { return points[i].residual / points[i].shape; };
  for (std::size_t k = 0; k < head; ++k) out.fitted_c = std::max(out.fitted_c, ratio(order[k]));
  for (std::size_t i = 0; i < points.size(); ++i) out.sup_c = std::max(out.sup_c, ratio(i));
  out.within.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.within[i] = points[i].residual <= out.fitted_c * points[i].shape;
    if (!out.within[i]) ++out.failures;
  }
  std::vector<double> x, y;
  for (const auto& p : points) {
    x.push_back(p.size);
    y.push_back(p.residual);
  }
  out.residual_slope = log_log_slope(x, y);
  return out;
}

}  // namespace lerchz::app

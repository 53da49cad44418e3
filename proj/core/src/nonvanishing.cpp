#include "lerchz/nonvanishing.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>

#include "lerchz/arith.hpp"
#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/parallel.hpp"

namespace lerchz {

namespace {

struct PartialSums {
  std::int64_t certified = 0;
  std::int64_t size = 0;
  ComplexApprox first{Complex(), 0.0};
  ComplexApprox second{Complex(), 0.0};
};

}  // namespace

bool certified_nonzero(const ComplexApprox& value, double threshold_multiplier) {
  const double floor = std::pow(10.0, 10.0 - static_cast<double>(current_config().digits));
  const double magnitude = to_double(abs(value.value));
  return magnitude > std::max(threshold_multiplier * value.err, floor);
}

NonvanishingReport count_nonvanishing(const WideMomentSpec& spec, const NonvanishingOptions& options) {
  spec.validate();
  const CharacterIndex index(spec.q);
  const std::int64_t phi = index.size();
  double total = 1;
  for (int i = 1; i < spec.m; ++i) total *= static_cast<double>(phi);
  if (total > static_cast<double>(options.cap)) throw CapacityError("wide family exceeds the enumeration cap");

  const auto values = twisted_character_lvalues(spec);
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::vector<std::vector<bool>> nonzero(m);
  std::vector<std::vector<ComplexApprox>> squares(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& v : values[i]) {
      nonzero[i].push_back(certified_nonzero(v, options.threshold_multiplier));
      squares[i].push_back(norm(v));
    }
  std::vector<bool> allowed(static_cast<std::size_t>(phi), true);
  if (spec.primitive_only)
    for (std::int64_t i = 0; i < phi; ++i)
      allowed[static_cast<std::size_t>(i)] = DirichletCharacter::from_index(spec.q, i).is_primitive();
  const std::int64_t target = spec.chi.index();

  // Partition by the first index; partial sums are combined in index order so
  // the result does not depend on the number of workers.
  const auto partial = parallel_map<PartialSums>(static_cast<std::size_t>(phi), options.workers, [&](std::size_t i0) {
    PartialSums out;
    if (!allowed[i0]) return out;
    std::vector<std::int64_t> idx(m, 0);
    idx[0] = static_cast<std::int64_t>(i0);
    for (;;) {
      std::int64_t prod = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) prod = index.multiply(prod, idx[i]);
      idx[m - 1] = index.multiply(target, index.inverse(prod));
      bool keep = true;
      for (std::int64_t k : idx) keep = keep && allowed[static_cast<std::size_t>(k)];
      if (keep) {
        ++out.size;
        ComplexApprox p = values[0][i0];
        ComplexApprox p2 = squares[0][i0];
        bool all = nonzero[0][i0];
        for (std::size_t i = 1; i < m; ++i) {
          const auto k = static_cast<std::size_t>(idx[i]);
          p *= values[i][k];
          p2 *= squares[i][k];
          all = all && nonzero[i][k];
        }
        if (all) ++out.certified;
        out.first += p;
        out.second += p2;
      }
      std::size_t k = 1;
      while (k + 1 < m && ++idx[k] == phi) idx[k++] = 0;
      if (k + 1 >= m) break;
    }
    return out;
  });

  const ComplexApprox zero(Complex(), 0.0);
  NonvanishingReport report{spec, 0, 0, 0, zero, zero, {}};
  for (const auto& p : partial) {
    report.family_size += p.size;
    report.certified += p.certified;
    report.first_moment += p.first;
    report.second_moment += p.second;
  }
  report.indeterminate = report.family_size - report.certified;
  report.cauchy_schwarz = cauchy_schwarz_bound(report.first_moment, report.second_moment);
  return report;
}

CauchySchwarzBound cauchy_schwarz_bound(const ComplexApprox& first_moment, const ComplexApprox& second_moment) {
  CauchySchwarzBound out;
  const double second = to_double(second_moment.value.re);
  const double e2 = second_moment.err + std::fabs(to_double(second_moment.value.im));
  if (!(second - e2 > 0)) {
    out.degenerate = true;
    return out;
  }
  const double first = std::max(to_double(abs(first_moment.value)) - first_moment.err, 0.0);
  // Round the quotient down so it stays a lower bound.
  out.value = std::nextafter(first * first / (second + e2), 0.0);
  return out;
}

SecondMomentCheck second_moment_check(std::int64_t q, int m, unsigned workers) {
  if (!is_prime(q) || q < 3) throw DomainError("second_moment_check needs an odd prime q");
  if (m < 3) throw DomainError("second_moment_check needs m >= 3");
  WideMomentSpec spec(q, m);
  spec.primitive_only = true;
  NonvanishingOptions options;
  options.workers = workers;
  const auto report = count_nonvanishing(spec, options);
  SecondMomentCheck out;
  out.normalized = to_double(report.second_moment.value.re) / std::pow(static_cast<double>(q - 2), m - 1);
  const double zeta_half = to_double(hurwitz_em(Rational(1), Complex(m / 2.0, 0.0)).value.re);
  const double zeta_m = to_double(hurwitz_em(Rational(1), Complex(static_cast<double>(m), 0.0)).value.re);
  const double log_term = std::log(static_cast<double>(q) / (8 * boost::math::constants::pi<double>())) +
                          boost::math::constants::euler<double>();
  out.prediction = zeta_half * zeta_half / zeta_m * std::pow(log_term, m);
  out.ratio = out.normalized / out.prediction;
  return out;
}

}  // namespace lerchz

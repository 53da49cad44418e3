#pragma once

// Counts of simultaneous non-vanishing of central values over wide families,
// and the Cauchy-Schwarz lower bound |sum prod L|^2 / sum prod |L|^2.

#include <cstdint>

#include "lerchz/numeric.hpp"
#include "lerchz/wide_moments.hpp"

namespace lerchz {

struct NonvanishingOptions {
  // A value is certified nonzero when |L| > multiplier * bound and above the
  // floor 10^(10 - P).
  double threshold_multiplier = 10;
  unsigned workers = 1;
  std::int64_t cap = 1000000;
};

struct CauchySchwarzBound {
  double value = 0;         // lower end of |first|^2 / second over the bounds
  bool degenerate = false;  // the second-moment interval contains 0
};

struct NonvanishingReport {
  WideMomentSpec spec;
  std::int64_t certified = 0;      // tuples whose factors are all certified nonzero
  std::int64_t indeterminate = 0;  // never certified zero, only uncertified
  std::int64_t family_size = 0;
  ComplexApprox first_moment;      // sum over the family of prod L
  ComplexApprox second_moment;     // sum over the family of prod |L|^2
  CauchySchwarzBound cauchy_schwarz;
};

bool certified_nonzero(const ComplexApprox& value, double threshold_multiplier = 10);

NonvanishingReport count_nonvanishing(const WideMomentSpec& spec, const NonvanishingOptions& options = {});

CauchySchwarzBound cauchy_schwarz_bound(const ComplexApprox& first_moment, const ComplexApprox& second_moment);

// Normalized second moment (q-2)^(1-m) sum* prod |L(chi_i, 1/2)|^2 over
// Wide*(q, m; 1) against zeta(m/2)^2 / zeta(m) (log(q / 8 pi) + gamma)^m.
struct SecondMomentCheck {
  double normalized = 0;
  double prediction = 0;
  double ratio = 0;
};
SecondMomentCheck second_moment_check(std::int64_t q, int m, unsigned workers = 1);

}  // namespace lerchz

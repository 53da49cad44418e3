#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "lerchz/numeric.hpp"

namespace lerchz::testing {

// Reference decimal values are given as strings so they keep full precision.
inline Complex ref(const std::string& re, const std::string& im = "0") {
  return Complex(Real(re), Real(im));
}

inline double distance(const Complex& a, const Complex& b) { return to_double(abs(a - b)); }

// The value lies within its own bound of the reference (plus a slack for the
// limited number of digits in the reference).
inline ::testing::AssertionResult within_bound(const ComplexApprox& v, const Complex& reference, double slack = 0) {
  const double d = distance(v.value, reference);
  if (d <= v.err + slack) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "value " << to_string(v.value, 25) << " differs from reference "
                                       << to_string(reference, 25) << " by " << d << ", bound " << v.err
                                       << ", slack " << slack;
}

inline ::testing::AssertionResult agree(const ComplexApprox& a, const ComplexApprox& b) {
  const auto r = compare(a, b);
  if (r.ok()) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << to_string(a.value, 25) << " vs " << to_string(b.value, 25)
                                       << ": difference " << r.difference << " > bound " << r.bound;
}

}  // namespace lerchz::testing

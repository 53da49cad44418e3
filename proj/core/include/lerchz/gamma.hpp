#pragma once

// Complex Gamma function by Stirling's series with upward recursion shifts.

#include "lerchz/numeric.hpp"

namespace lerchz {

// Gamma(s); throws PoleError at s = 0, -1, -2, ...
ComplexApprox gamma(const Complex& s);
// 1 / Gamma(s), entire; exactly zero at the poles of Gamma.
ComplexApprox rgamma(const Complex& s);

}  // namespace lerchz

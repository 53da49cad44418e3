#pragma once

// Bernoulli numbers as exact rationals (B_1 = -1/2) and their working
// precision images, shared read-only across threads.

#include <boost/multiprecision/gmp.hpp>

#include <memory>
#include <vector>

#include "lerchz/numeric.hpp"

namespace lerchz {

using BigRational = boost::multiprecision::mpq_rational;

// Exact B_k, computed from sum_{j=0}^{n} binom(n+1, j) B_j = 0 and cached.
BigRational bernoulli_exact(unsigned k);

// B_k / k! for k = 0..K at the current working precision. The returned
// table is immutable and may be longer than requested.
std::shared_ptr<const std::vector<Real>> bernoulli_scaled(unsigned K);

// Bernoulli polynomial B_k(x).
Real bernoulli_polynomial(unsigned k, const Real& x);

// Upper bound for sup over x of |B_k({x})| / k!, the periodic Bernoulli
// function that appears in the Euler-Maclaurin remainder.
double periodic_bernoulli_sup(unsigned k);

}  // namespace lerchz

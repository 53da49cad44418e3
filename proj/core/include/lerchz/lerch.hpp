#pragma once

// The Lerch zeta function zeta(alpha, c, s) = sum_{n >= 0} e(n alpha) (n + c)^(-s)
// by several independent routes, each returning a value with an absolute
// error bound.

#include <cstdint>
#include <string>
#include <vector>

#include "lerchz/config.hpp"
#include "lerchz/numeric.hpp"

namespace lerchz {

struct LerchArgument {
  Rational alpha;  // reduced into [0, 1)
  Rational c;      // positive; the canonical range is (0, 1]
  Complex s;

  LerchArgument(const Rational& alpha, const Rational& c, Complex s);

  bool alpha_integral() const { return alpha.numerator() == 0; }
  std::string describe() const;
};

enum class Route {
  Series,        // Dirichlet series with Euler-Maclaurin tails per residue class
  Hurwitz,       // Euler-Maclaurin continuation of zeta(0, c, s)
  Taylor,        // Taylor expansion in c around c = 0
  Integral,      // period integral with prefactor 1 / Gamma(s)
  Continuation,  // Euler-Maclaurin continuation for alpha not integral, any s
};

std::string route_name(Route route);

// Sentinel for hurwitz_em to select L and K automatically.
inline constexpr int kAdaptive = -1;

// Requires Re s > 1 + delta, or Re s > 0 when alpha is not an integer.
ComplexApprox lerch_series(const LerchArgument& arg);

// zeta(0, c, s) = sum_{n < L} (n + c)^(-s) + X^(1-s)/(s-1) + X^(-s)/2
//   + sum_{k=2}^{K} B_k/k! (s)_{k-1} X^(1-s-k) + R,   X = L + c,
// with |R| <= sup|B~_K|/K! |(s)_K| X^(1 - Re s - K) / (Re s + K - 1).
ComplexApprox hurwitz_em(const Rational& c, const Complex& s, int L = kAdaptive, int K = kAdaptive);

// zeta(0, c, s) - 1/(s - 1); finite at s = 1 where it equals -digamma(c).
ComplexApprox hurwitz_regular(const Rational& c, const Complex& s);

// Euler-Maclaurin continuation for non-integral alpha, valid for all s.
ComplexApprox lerch_continuation(const LerchArgument& arg);

// zeta(alpha, c, s) = c^(-s) + e(alpha) sum_n (-c)^n binom(s+n-1, n) zeta(alpha, 1, s+n)
// for 0 < c < 1 and Re s > 0.
ComplexApprox lerch_taylor(const LerchArgument& arg);
// The same expansion without the c^(-s) term; defined for 0 <= c < 1.
ComplexApprox lerch_taylor_regular(const Rational& alpha, const Rational& c, const Complex& s);

// zeta(alpha, c, s) = Gamma(s)^(-1) int_0^inf t^(s-1) e^(-ct) / (1 - e(alpha) e^(-t)) dt
// for Re s > 0 and alpha at distance at least 1e-3 from the integers.
ComplexApprox lerch_integral(const LerchArgument& arg);

struct RoutedValue {
  ComplexApprox value;
  Route route;
};

std::vector<Route> applicable_routes(const LerchArgument& arg);
ComplexApprox lerch_route(const LerchArgument& arg, Route route);

// Chooses the cheapest applicable route. With dual = true a second route is
// evaluated where available; disagreement beyond the combined bounds raises
// InternalError, otherwise the tighter value is returned.
RoutedValue lerch_eval_routed(const LerchArgument& arg, bool dual = false);
ComplexApprox lerch_eval(const LerchArgument& arg, bool dual = false);

// Compares zeta(alpha, c, 1 - s) with
//   Gamma(s) (2 pi)^(-s) [e(s/4 - alpha c) zeta(1 - c, alpha, s) + e(-s/4 + (1 - alpha) c) zeta(c, 1 - alpha, s)]
// for 0 < alpha, c < 1.
struct FunctionalEquationCheck {
  ComplexApprox lhs;
  ComplexApprox rhs;
  Agreement agreement;
};
FunctionalEquationCheck functional_equation_check(const LerchArgument& arg);

// Coefficients C_0..C_N of
//   zeta(alpha, c, 1/2) = (1+i)/2 alpha^(-1/2) + (1-i)/2 (1-alpha)^(-1/2) + c^(-1/2) + sum_n C_n c^n,
// with C_n = e(alpha) (-1)^n binom(n - 1/2, n) zeta(alpha, 1, 1/2 + n) for n >= 1.
std::vector<ComplexApprox> expinc2_profile(const Rational& alpha, unsigned N);
// C_0 from the Hurwitz values: (e(1/8) g(alpha) + e(-1/8) g(1 - alpha)) / sqrt 2,
// g(x) = zeta(0, x, 1/2) - x^(-1/2).
ComplexApprox expinc2_c0_hurwitz(const Rational& alpha);
// Sums the expansion at c in (0, 1) including a bound for the omitted terms.
ComplexApprox expinc2_resum(const Rational& alpha, const Rational& c, const std::vector<ComplexApprox>& coefficients);

// zeta(a/q, c, s) for a = 0..q-1 from the Hurwitz values zeta(0, (j + c)/q, s)
// and a discrete Fourier transform. At s = 1 the a = 0 entry holds the
// regular part zeta(0, c, s) - 1/(s - 1).
class HurwitzCache;
std::vector<ComplexApprox> lerch_frequency_row(const Rational& c, const Complex& s, std::int64_t q,
                                               HurwitzCache* cache = nullptr);

}  // namespace lerchz

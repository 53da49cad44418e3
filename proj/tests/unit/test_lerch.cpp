#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/hurwitz_cache.hpp"
#include "lerchz/lerch.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace lerchz;
using lerchz::testing::agree;
using lerchz::testing::distance;
using lerchz::testing::within_bound;

namespace {

Complex real(double x) { return Complex(x, 0.0); }

LerchArgument arg(Rational a, Rational c, Complex s) { return LerchArgument(a, c, std::move(s)); }

Real zeta2() { return pi() * pi() / 6; }

}  // namespace

TEST(LerchSeries, RiemannZetaTwo) {
  ConfigScope scope(40);
  const auto v = lerch_series(arg(0, 1, real(2)));
  EXPECT_TRUE(within_bound(v, Complex(zeta2())));
  EXPECT_LT(v.err, 1e-34);
}

TEST(LerchSeries, AlternatingZetaTwo) {
  ConfigScope scope(40);
  const auto v = lerch_series(arg(Rational(1, 2), 1, real(2)));
  // eta(2) = pi^2/12; the accelerated alternating sum confirms the closed form.
  const Complex oracle = lerchz::testing::eta(real(2));
  EXPECT_LT(distance(oracle, Complex(zeta2() / 2)), 1e-40);
  EXPECT_TRUE(within_bound(v, oracle, 1e-40));
}

TEST(LerchSeries, BisectionIdentityAtThree) {
  ConfigScope scope(40);
  const auto half = lerch_series(arg(0, Rational(1, 2), real(3)));
  const auto one = lerch_series(arg(0, 1, real(3)));
  EXPECT_TRUE(agree(half, one * Complex(7.0, 0.0)));
  EXPECT_LT(std::abs(to_double(half.value.re) - 8.4143983221), 1e-9);
}

TEST(LerchSeries, DomainErrors) {
  ConfigScope scope(40);
  EXPECT_THROW(lerch_series(arg(0, 1, real(1))), DomainError);
  EXPECT_THROW(lerch_series(arg(0, 1, real(0.5))), DomainError);
  EXPECT_THROW(lerch_series(arg(Rational(1, 3), 1, real(-0.5))), DomainError);
  EXPECT_THROW(LerchArgument(Rational(1, 3), Rational(0), real(2)), DomainError);
}

TEST(HurwitzEM, CentralValues) {
  ConfigScope scope(40);
  const Complex zeta_half = lerchz::testing::zeta_from_eta(real(0.5));
  const auto z = hurwitz_em(1, real(0.5));
  EXPECT_TRUE(within_bound(z, zeta_half, 1e-40));
  EXPECT_LT(std::abs(to_double(z.value.re) + 1.4603545088), 1e-10);

  const auto h = hurwitz_em(Rational(1, 2), real(0.5));
  const Complex expected = zeta_half * (boost::multiprecision::sqrt(Real(2)) - 1);
  EXPECT_TRUE(within_bound(h, expected, 1e-40));
}

TEST(HurwitzEM, MatchesSeriesInOverlap) {
  ConfigScope scope(40);
  EXPECT_TRUE(agree(hurwitz_em(1, real(2)), lerch_series(arg(0, 1, real(2)))));
  const Complex s(2.5, 3.0);
  EXPECT_TRUE(agree(hurwitz_em(Rational(2, 7), s), lerch_series(arg(0, Rational(2, 7), s))));
}

TEST(HurwitzEM, ExplicitLKAndPole) {
  ConfigScope scope(40);
  const auto fixed = hurwitz_em(1, real(0.5), 30, 40);
  const auto adaptive = hurwitz_em(1, real(0.5));
  EXPECT_TRUE(agree(fixed, adaptive));
  // A small order gives a large but honest bound.
  const auto coarse = hurwitz_em(1, real(0.5), 5, 2);
  EXPECT_GT(coarse.err, 1e-8);
  EXPECT_TRUE(agree(coarse, adaptive));
  EXPECT_THROW(hurwitz_em(1, real(1)), PoleError);
  EXPECT_THROW(hurwitz_em(1, real(-3), 10, 2), DomainError);
}

TEST(HurwitzEM, ComplexArgumentAgainstEta) {
  ConfigScope scope(40);
  const Complex s(0.5, 14.134725141734693);
  const auto z = hurwitz_em(1, s);
  EXPECT_TRUE(within_bound(z, lerchz::testing::zeta_from_eta(s, 140), 1e-38));
  // Close to the first nontrivial zero.
  EXPECT_LT(to_double(abs(z.value)), 1e-14);
}

TEST(HurwitzEM, BisectionIdentity) {
  ConfigScope scope(40);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(1, 30);
  std::uniform_real_distribution<double> re(-1.5, 2.5), im(-10, 10);
  const Complex two(2.0, 0.0);
  for (int i = 0; i < 25; ++i) {
    const Rational c(num(rng), 31);
    const Complex s(re(rng), im(rng));
    const auto lhs = hurwitz_em(c / 2, s) + hurwitz_em((c + 1) / 2, s);
    const auto rhs = hurwitz_em(c, s) * pow(two, s);
    EXPECT_TRUE(agree(lhs, rhs)) << to_string(c) << " " << to_string(s, 8);
  }
}

TEST(HurwitzEM, RegularPartAtOne) {
  ConfigScope scope(40);
  // zeta(0, c, s) - 1/(s-1) at s = 1 is -digamma(c); digamma(1) = -gamma.
  const auto g = hurwitz_regular(1, real(1));
  EXPECT_TRUE(within_bound(g, Complex(Real("0.57721566490153286060651209008240243104215933593992")), 1e-45));
  // digamma(1/2) = -gamma - 2 log 2
  const auto h = hurwitz_regular(Rational(1, 2), real(1));
  const Real expected = Real("0.57721566490153286060651209008240243104215933593992") + 2 * log(Real(2));
  EXPECT_TRUE(within_bound(h, Complex(expected), 1e-45));
}

TEST(LerchTaylor, ZeroLimitGivesZetaHalf) {
  ConfigScope scope(40);
  const auto reg0 = lerch_taylor_regular(0, 0, real(0.5));
  const auto z = hurwitz_em(1, real(0.5));
  EXPECT_TRUE(agree(reg0, z));
  // zeta(0, c, 1/2) - c^(-1/2) at c = 1e-6 stays close to zeta(1/2).
  const Rational c(1, 1000000);
  const auto small = hurwitz_em(c, real(0.5)) - ComplexApprox(Complex(Real(1000)), 0.0);
  const auto reg = lerch_taylor_regular(0, c, real(0.5));
  EXPECT_TRUE(agree(small, reg));
  EXPECT_LT(distance(small.value, z.value), 1e-2);
}

TEST(LerchTaylor, OverlapAgreement) {
  ConfigScope scope(40);
  EXPECT_TRUE(agree(lerch_taylor(arg(Rational(1, 2), Rational(1, 3), real(2))),
                    lerch_series(arg(Rational(1, 2), Rational(1, 3), real(2)))));
  EXPECT_TRUE(agree(lerch_taylor(arg(Rational(1, 4), Rational(1, 2), real(0.5))),
                    lerch_integral(arg(Rational(1, 4), Rational(1, 2), real(0.5)))));
  EXPECT_THROW(lerch_taylor(arg(0, Rational(1, 2), real(1))), PoleError);
  EXPECT_THROW(lerch_taylor(arg(Rational(1, 3), 1, real(0.5))), DomainError);
}

TEST(LerchIntegral, EtaValues) {
  ConfigScope scope(40);
  const auto v = lerch_integral(arg(Rational(1, 2), 1, real(0.5)));
  const Complex oracle = lerchz::testing::eta(real(0.5));
  EXPECT_TRUE(within_bound(v, oracle, 1e-40));
  EXPECT_LT(std::abs(to_double(v.value.re) - 0.6048986434), 1e-10);
  const auto w = lerch_integral(arg(Rational(1, 2), 1, real(2)));
  EXPECT_TRUE(within_bound(w, Complex(zeta2() / 2), 1e-45));
}

TEST(LerchIntegral, AgreesWithTaylorAndSeries) {
  ConfigScope scope(40);
  const auto a = arg(Rational(1, 3), Rational(2, 3), real(1.5));
  EXPECT_TRUE(agree(lerch_integral(a), lerch_taylor(a)));
  EXPECT_TRUE(agree(lerch_integral(a), lerch_series(a)));
  const auto b = arg(Rational(2, 5), Rational(1, 7), Complex(2.2, -1.5));
  EXPECT_TRUE(agree(lerch_integral(b), lerch_series(b)));
  EXPECT_THROW(lerch_integral(arg(0, 1, real(2))), DomainError);
  EXPECT_THROW(lerch_integral(arg(Rational(1, 5000), 1, real(2))), DomainError);
}

TEST(LerchEval, DispatchExamples) {
  ConfigScope scope(40);
  EXPECT_TRUE(within_bound(lerch_eval(arg(0, 1, real(2))), Complex(zeta2()), 1e-45));
  const auto routed = lerch_eval_routed(arg(Rational(1, 2), 1, real(0.5)), true);
  EXPECT_TRUE(within_bound(routed.value, lerchz::testing::eta(real(0.5)), 1e-40));
  EXPECT_THROW(lerch_eval(arg(0, 1, real(1))), PoleError);
  // Large denominator falls through to the integral route.
  const auto big = lerch_eval_routed(arg(Rational(1234, 100003), Rational(1, 2), real(0.5)));
  EXPECT_EQ(big.route, Route::Integral);
  // Near-integral alpha refuses the integral route.
  const auto near = arg(Rational(3, 100003), Rational(1, 2), real(0.5));
  const auto routes = applicable_routes(near);
  EXPECT_EQ(std::count(routes.begin(), routes.end(), Route::Integral), 0);
  EXPECT_EQ(std::count(routes.begin(), routes.end(), Route::Taylor), 1);
  EXPECT_EQ(lerch_eval_routed(near).route, Route::Series);
}

TEST(LerchEval, ShiftIdentity) {
  ConfigScope scope(40);
  // zeta(alpha, c, s) = c^(-s) + e(alpha) zeta(alpha, c + 1, s)
  for (const auto& [a, c] : {std::pair{Rational(1, 3), Rational(1, 4)}, std::pair{Rational(5, 6), Rational(2, 3)}}) {
    for (const Complex& s : {real(1.5), Complex(2.0, 1.0)}) {
      const auto lhs = lerch_eval(arg(a, c, s));
      const auto shifted = lerch_series(arg(a, c + 1, s));
      const Complex lead = pow(to_real(c), -s);
      const auto rhs = ComplexApprox(lead, 1e-45) + shifted * unit_root(a);
      EXPECT_TRUE(agree(lhs, rhs));
    }
  }
}

TEST(LerchEval, RouteAgreementOnRandomGrid) {
  ConfigScope scope(30);
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> den(2, 12);
  std::uniform_real_distribution<double> re(0.1, 3.0), im(-5, 5);
  for (int i = 0; i < 24; ++i) {
    const int r = den(rng);
    const Rational a(std::uniform_int_distribution<int>(1, r - 1)(rng), r);
    const int rc = den(rng);
    const Rational c(std::uniform_int_distribution<int>(1, rc - 1)(rng), rc);
    const Complex s(re(rng), im(rng));
    const auto x = arg(a, c, s);
    std::vector<ComplexApprox> values;
    for (Route route : applicable_routes(x)) values.push_back(lerch_route(x, route));
    ASSERT_GE(values.size(), 2U);
    for (std::size_t j = 1; j < values.size(); ++j) EXPECT_TRUE(agree(values[0], values[j])) << x.describe();
  }
}

TEST(LerchEval, ErrorBoundsAreHonest) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> re(0.1, 3.0), im(-5, 5);
  for (int i = 0; i < 12; ++i) {
    const Rational a(static_cast<int>(rng() % 6), 7);
    const Rational c(1 + static_cast<int>(rng() % 8), 9);
    const double sr = re(rng), si = im(rng);
    ComplexApprox low, high;
    {
      ConfigScope scope(20);
      low = lerch_eval(arg(a, c, Complex(sr, si)));
    }
    {
      ConfigScope scope(80);
      high = lerch_eval(arg(a, c, Complex(sr, si)));
      EXPECT_LE(distance(low.value, high.value), low.err + high.err) << i;
    }
  }
}

TEST(FunctionalEquation, Examples) {
  ConfigScope scope(40);
  const auto a = functional_equation_check(arg(Rational(1, 2), Rational(1, 2), real(1.5)));
  EXPECT_TRUE(a.agreement.ok());
  EXPECT_LT(a.agreement.difference, 1e-30);
  for (const auto& x : {arg(Rational(1, 3), Rational(1, 4), real(2)), arg(Rational(1, 5), Rational(4, 5), real(1.25)),
                        arg(Rational(3, 7), Rational(2, 9), Complex(0.5, -1.0 / 3))}) {
    const auto r = functional_equation_check(x);
    EXPECT_TRUE(r.agreement.ok()) << x.describe() << " " << r.agreement.difference << " " << r.agreement.bound;
  }
  EXPECT_THROW(functional_equation_check(arg(0, Rational(1, 2), real(2))), DomainError);
}

TEST(Expinc2, ResummationMatchesIntegral) {
  ConfigScope scope(40);
  const Rational alpha(1, 3);
  const auto coeffs = expinc2_profile(alpha, 180);
  const auto resum = expinc2_resum(alpha, Rational(1, 2), coeffs);
  EXPECT_TRUE(agree(resum, lerch_integral(arg(alpha, Rational(1, 2), real(0.5)))));
  EXPECT_LT(resum.err, 1e-30);
}

TEST(Expinc2, ConstantTermTwoWays) {
  ConfigScope scope(40);
  for (const Rational alpha : {Rational(1, 7), Rational(1, 2), Rational(5, 6)}) {
    const auto c0 = expinc2_profile(alpha, 0).at(0);
    EXPECT_TRUE(agree(c0, expinc2_c0_hurwitz(alpha)));
  }
}

TEST(Expinc2, CoefficientDecayAndContinuity) {
  ConfigScope scope(30);
  const auto coeffs = expinc2_profile(Rational(1, 3), 200);
  double worst = 0;
  for (unsigned n = 1; n < coeffs.size(); ++n)
    worst = std::max(worst, std::sqrt(static_cast<double>(n)) * coeffs[n].magnitude_upper());
  EXPECT_LE(worst, 10.0);
  const auto left = expinc2_profile(Rational(49, 100), 0).at(0);
  const auto right = expinc2_profile(Rational(51, 100), 0).at(0);
  EXPECT_LT(distance(left.value, right.value), 0.1);
}

TEST(FrequencyRow, MatchesDirectEvaluation) {
  ConfigScope scope(40);
  const Complex s(0.5, 0.0);
  HurwitzCache cache(s);
  const auto row = lerch_frequency_row(Rational(2, 5), s, 7, &cache);
  ASSERT_EQ(row.size(), 7U);
  EXPECT_TRUE(agree(row[0], hurwitz_em(Rational(2, 5), s)));
  for (int a = 1; a < 7; ++a) EXPECT_TRUE(agree(row[a], lerch_series(arg(Rational(a, 7), Rational(2, 5), s)))) << a;
  EXPECT_EQ(cache.size(), 7U);
  // At s = 1 the non-zero frequencies are finite.
  const auto row1 = lerch_frequency_row(Rational(1), real(1), 4);
  EXPECT_TRUE(agree(row1[2], lerch_series(arg(Rational(1, 2), 1, real(1)))));
}

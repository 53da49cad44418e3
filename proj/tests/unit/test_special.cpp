#include <gtest/gtest.h>

#include "lerchz/bernoulli.hpp"
#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/gamma.hpp"
#include "lerchz/quadrature.hpp"
#include "test_support.hpp"

using namespace lerchz;
using lerchz::testing::distance;

TEST(Bernoulli, ExactValues) {
  EXPECT_EQ(bernoulli_exact(0), BigRational(1));
  EXPECT_EQ(bernoulli_exact(1), BigRational(-1, 2));
  EXPECT_EQ(bernoulli_exact(2), BigRational(1, 6));
  EXPECT_EQ(bernoulli_exact(3), BigRational(0));
  EXPECT_EQ(bernoulli_exact(12), BigRational(-691, 2730));
  EXPECT_EQ(bernoulli_exact(30), BigRational(BigRational::value_type("8615841276005")) / 14322);
}

TEST(Bernoulli, RecurrenceHoldsExactly) {
  // sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1.
  for (unsigned n = 1; n <= 60; ++n) {
    BigRational sum(0);
    boost::multiprecision::mpz_int binom(1);
    for (unsigned j = 0; j <= n; ++j) {
      sum += BigRational(binom) * bernoulli_exact(j);
      binom = binom * (n + 1 - j) / (j + 1);
    }
    EXPECT_EQ(sum, BigRational(0)) << n;
  }
}

TEST(Bernoulli, ScaledTableAndPolynomials) {
  ConfigScope scope(40);
  const auto t = bernoulli_scaled(20);
  ASSERT_GE(t->size(), 21U);
  EXPECT_LT(to_double(abs(Complex((*t)[2] - Real(1) / 12))), 1e-45);
  const Real x("0.3");
  EXPECT_LT(to_double(abs(Complex(bernoulli_polynomial(2, x) - (x * x - x + Real(1) / 6)))), 1e-45);
  // Sup bound holds on a grid for the periodic Bernoulli functions.
  for (unsigned k = 1; k <= 12; ++k) {
    Real fact(1);
    for (unsigned j = 2; j <= k; ++j) fact *= j;
    for (int i = 0; i <= 50; ++i) {
      const double v = std::fabs(to_double(bernoulli_polynomial(k, Real(i) / 50) / fact));
      EXPECT_LE(v, periodic_bernoulli_sup(k)) << k << " " << i;
    }
  }
}

TEST(Gamma, KnownValues) {
  ConfigScope scope(40);
  const auto g = gamma(Complex(0.5, 0.0));
  EXPECT_LE(distance(g.value, Complex(boost::multiprecision::sqrt(pi()))), g.err + 1e-48);
  const auto g5 = gamma(Complex(5.0, 0.0));
  EXPECT_LE(distance(g5.value, Complex(24.0, 0.0)), g5.err + 1e-46);
  EXPECT_THROW(gamma(Complex(-2.0, 0.0)), PoleError);
  EXPECT_EQ(rgamma(Complex(-3.0, 0.0)).value, Complex());
}

TEST(Gamma, ReflectionFormula) {
  ConfigScope scope(40);
  const Complex one(Real(1));
  for (const Complex& s : {Complex(0.25, 0.0), Complex(0.5, 3.0), Complex(-2.5, 1.0), Complex(0.1, -7.0)}) {
    const auto prod = gamma(s) * gamma(one - s);
    const Complex expected = Complex(pi()) / (exp(Complex(Real(0), pi()) * s) - exp(Complex(Real(0), -pi()) * s)) *
                             Complex(Real(0), Real(2));
    EXPECT_LE(distance(prod.value, expected), prod.err + 1e-45) << to_string(s, 6);
  }
}

TEST(Gamma, RecurrenceAndReciprocal) {
  ConfigScope scope(40);
  const Complex s(0.3, 20.0);
  const auto a = gamma(s + Complex(Real(1)));
  const auto b = gamma(s) * s;
  EXPECT_TRUE(lerchz::testing::agree(a, b));
  const auto r = rgamma(s) * gamma(s);
  EXPECT_LE(distance(r.value, Complex(Real(1))), r.err);
}

TEST(Quadrature, EndpointSingularities) {
  ConfigScope scope(40);
  // int_0^1 x^(-1/2) dx = 2
  const auto r1 = tanh_sinh([](const Real& x) { return Complex(Real(1 / boost::multiprecision::sqrt(x))); }, Real(0), Real(1));
  EXPECT_LE(distance(r1.value.value, Complex(2.0, 0.0)), r1.value.err);
  EXPECT_LT(r1.value.err, 1e-30);
  // int_0^1 log x dx = -1
  const auto r2 = tanh_sinh([](const Real& x) { return Complex(Real(boost::multiprecision::log(x))); }, Real(0), Real(1));
  EXPECT_LE(distance(r2.value.value, Complex(-1.0, 0.0)), r2.value.err);
  // int_1^3 e^x dx
  const auto r3 = tanh_sinh([](const Real& x) { return Complex(Real(boost::multiprecision::exp(x))); }, Real(1), Real(3));
  const Real expected = boost::multiprecision::exp(Real(3)) - boost::multiprecision::exp(Real(1));
  EXPECT_LE(distance(r3.value.value, Complex(expected)), r3.value.err);
}

#include <gtest/gtest.h>

#include "lerchz/errors.hpp"
#include "lerchz/numeric.hpp"
#include "test_support.hpp"

using namespace lerchz;
using lerchz::testing::ref;

TEST(WorkingPrecision, ScopedAndRestored) {
  const unsigned before = working_digits();
  {
    WorkingPrecision wp(60);
    EXPECT_EQ(working_digits(), 60U);
    EXPECT_LT(unit_roundoff(), 1e-59);
  }
  EXPECT_EQ(working_digits(), before);
}

TEST(Complex, ArithmeticAndElementary) {
  WorkingPrecision wp(40);
  const Complex a(1.5, -2.0), b(0.25, 3.0);
  const Complex p = a * b;
  EXPECT_EQ(p, Complex(1.5 * 0.25 + 6.0, 4.5 - 0.5));
  const Complex back = p / b;
  EXPECT_LT(lerchz::testing::distance(back, a), 1e-38);
  EXPECT_LT(lerchz::testing::distance(exp(log(a)), a), 1e-38);
  EXPECT_LT(lerchz::testing::distance(sqrt(a) * sqrt(a), a), 1e-38);
  EXPECT_LT(lerchz::testing::distance(pow(a, 3U), a * a * a), 1e-37);
  // 2^(1/2 + i) = sqrt(2) e^(i log 2)
  const Complex v = pow(Real(2), Complex(0.5, 1.0));
  const Complex expected = expi(log(Real(2))) * sqrt(Real(2));
  EXPECT_LT(lerchz::testing::distance(v, expected), 1e-38);
}

TEST(Complex, UnitRootUsesExactAngle) {
  WorkingPrecision wp(40);
  EXPECT_EQ(unit_root(Rational(1, 4)), Complex(0.0, 1.0));
  EXPECT_EQ(unit_root(Rational(-1, 2)), Complex(-1.0, 0.0));
  EXPECT_EQ(unit_root(Rational(7, 1)), Complex(1.0, 0.0));
  const Complex w = unit_root(Rational(1, 3));
  EXPECT_LT(lerchz::testing::distance(w, ref("-0.5", "0.8660254037844386467637231707529361834714")), 1e-39);
  // e(k/7) for k and k + 7000 are computed identically.
  EXPECT_EQ(unit_root(Rational(3, 7)), unit_root(Rational(7003, 7)));
}

TEST(Rational, FracAndParse) {
  EXPECT_EQ(frac(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(frac(Rational(5, 2)), Rational(1, 2));
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/2x"), ParseError);
}

TEST(Parse, ComplexForms) {
  WorkingPrecision wp(40);
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("0.5+2i"), Complex(0.5, 2.0));
  EXPECT_EQ(parse_complex("0.5-0.25i"), Complex(0.5, -0.25));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("1e-1+1e-1i").re, Real("0.1"));
  EXPECT_EQ(parse_complex("1/2+1/4i"), Complex(0.5, 0.25));
  EXPECT_THROW(parse_complex("x+i"), ParseError);
}

TEST(Format, RoundTrip) {
  WorkingPrecision wp(40);
  const Real x = pi() / 7;
  EXPECT_EQ(Real(to_string(x)), x);
}

TEST(ComplexApprox, BoundsPropagateConservatively) {
  WorkingPrecision wp(40);
  const ComplexApprox a(Complex(1.0, 1.0), 1e-10);
  const ComplexApprox b(Complex(2.0, -1.0), 1e-12);
  // Worst-case perturbations stay inside the propagated bound.
  const Complex da(Real("7e-11"), Real("7e-11"));
  const Complex db(Real("-7e-13"), Real("7e-13"));
  const auto prod = a * b;
  const Complex perturbed = (a.value + da) * (b.value + db);
  EXPECT_LE(lerchz::testing::distance(perturbed, prod.value), prod.err);
  const auto sum = a + b;
  EXPECT_LE(lerchz::testing::distance((a.value + da) + (b.value + db), sum.value), sum.err);
  const auto quot = a / b;
  EXPECT_LE(lerchz::testing::distance((a.value + da) / (b.value + db), quot.value), quot.err);
  EXPECT_THROW(a / ComplexApprox(Complex(1e-12, 0.0), 1e-11), NumericError);
}

TEST(ComplexApprox, CompareUsesCombinedBounds) {
  WorkingPrecision wp(40);
  const ComplexApprox a(Complex(1.0, 0.0), 1e-6);
  const ComplexApprox b(Complex(1.0000015, 0.0), 1e-6);
  EXPECT_TRUE(compare(a, b).ok());
  const ComplexApprox c(Complex(1.0000025, 0.0), 1e-6);
  EXPECT_FALSE(compare(a, c).ok());
}

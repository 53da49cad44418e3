#include <gtest/gtest.h>

#include <cmath>

#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz/nonvanishing.hpp"
#include "lerchz/wide_moments.hpp"

using namespace lerchz;

namespace {

// Recount through per-character flags: a product is certified exactly when
// every factor is.
std::int64_t factorized_recount(const WideMomentSpec& spec, double multiplier = 10) {
  const auto chars = enumerate_characters(spec.q);
  std::vector<std::vector<bool>> flag(spec.twists.size());
  for (std::size_t i = 0; i < spec.twists.size(); ++i)
    for (const auto& chi : chars)
      flag[i].push_back(certified_nonzero(dirichlet_l(spec.twists[i] * chi, spec.s), multiplier));
  std::int64_t count = 0;
  for_each_wide_tuple(spec, [&](const std::vector<std::int64_t>& idx) {
    bool all = true;
    for (std::size_t i = 0; i < idx.size(); ++i) all = all && flag[i][static_cast<std::size_t>(idx[i])];
    if (all) ++count;
  });
  return count;
}

WideMomentSpec primitive(std::int64_t q, int m) {
  WideMomentSpec spec(q, m);
  spec.primitive_only = true;
  return spec;
}

}  // namespace

TEST(Nonvanishing, PairsModFive) {
  ConfigScope scope(30);
  const auto r = count_nonvanishing(primitive(5, 2));
  EXPECT_EQ(r.family_size, 3);
  EXPECT_EQ(r.certified, 3);
  EXPECT_EQ(r.indeterminate, 0);
  for (const auto& chi : enumerate_characters(5, true))
    EXPECT_GT(to_double(abs(dirichlet_l(chi, Complex(0.5, 0.0)).value)), 0.1);
}

TEST(Nonvanishing, EmptyFamily) {
  ConfigScope scope(30);
  // Mod 3 the only primitive character is quadratic, so a primitive pair has
  // principal product and cannot hit the quadratic target.
  WideMomentSpec spec(DirichletCharacter::quadratic(3), 2);
  spec.primitive_only = true;
  const auto r = count_nonvanishing(spec);
  EXPECT_EQ(r.family_size, 0);
  EXPECT_EQ(r.certified, 0);
  EXPECT_TRUE(r.cauchy_schwarz.degenerate);
}

TEST(Nonvanishing, MatchesFactorizedRecount) {
  ConfigScope scope(30);
  const auto psi = DirichletCharacter::quadratic(3);
  WideMomentSpec spec(DirichletCharacter::trivial(11), 3, {psi, psi, psi});
  spec.primitive_only = true;
  const auto r = count_nonvanishing(spec);
  EXPECT_EQ(r.certified, factorized_recount(spec));
  EXPECT_EQ(r.family_size, 72);
  WideMomentSpec full(DirichletCharacter::from_index(11, 3), 3, {psi, DirichletCharacter::trivial(1), psi});
  EXPECT_EQ(count_nonvanishing(full).certified, factorized_recount(full));
}

TEST(Nonvanishing, MomentsMatchWideMoment) {
  ConfigScope scope(30);
  const auto spec = primitive(7, 3);
  const auto r = count_nonvanishing(spec);
  const auto normalized = wide_moment_brute(spec);
  EXPECT_NEAR(to_double(r.first_moment.value.re) / 25.0, to_double(normalized.value.re), 1e-20);
}

TEST(Nonvanishing, WorkersDoNotChangeResult) {
  ConfigScope scope(25);
  NonvanishingOptions one, three;
  three.workers = 3;
  const auto a = count_nonvanishing(primitive(13, 3), one);
  const auto b = count_nonvanishing(primitive(13, 3), three);
  EXPECT_EQ(a.certified, b.certified);
  EXPECT_EQ(a.first_moment.value, b.first_moment.value);
  EXPECT_EQ(a.second_moment.value, b.second_moment.value);
}

TEST(Nonvanishing, ThresholdMonotonicity) {
  ConfigScope scope(12);
  const auto spec = primitive(11, 3);
  std::int64_t previous = -1;
  for (double mult : {1e30, 1e20, 1e10, 1.0}) {
    NonvanishingOptions options;
    options.threshold_multiplier = mult;
    const auto r = count_nonvanishing(spec, options);
    if (previous >= 0) EXPECT_GE(r.certified, previous);
    previous = r.certified;
  }
}

TEST(CauchySchwarz, EqualityCase) {
  const ComplexApprox v(Complex(2.0, 1.0), 0.0);
  ComplexApprox first(Complex(), 0.0), second(Complex(), 0.0);
  for (int i = 0; i < 7; ++i) {
    first += v;
    second += norm(v);
  }
  const auto b = cauchy_schwarz_bound(first, second);
  EXPECT_FALSE(b.degenerate);
  EXPECT_NEAR(b.value, 7.0, 1e-12);
  EXPECT_LE(b.value, 7.0);
  EXPECT_TRUE(cauchy_schwarz_bound(first, ComplexApprox(Complex(1.0, 0.0), 2.0)).degenerate);
}

TEST(CauchySchwarz, BoundBelowCount) {
  ConfigScope scope(30);
  for (std::int64_t q : {5, 7, 11, 13}) {
    const auto r = count_nonvanishing(primitive(q, 3));
    EXPECT_FALSE(r.cauchy_schwarz.degenerate);
    EXPECT_LE(r.cauchy_schwarz.value, static_cast<double>(r.certified + r.indeterminate)) << "q=" << q;
    EXPECT_LE(r.cauchy_schwarz.value, static_cast<double>(r.certified)) << "q=" << q;
    EXPECT_GT(r.cauchy_schwarz.value, 0.0);
  }
}

TEST(CauchySchwarz, SecondMomentAgainstAsymptotic) {
  ConfigScope scope(20);
  const auto c4 = second_moment_check(101, 4);
  EXPECT_GT(c4.ratio, 0.5);
  EXPECT_LT(c4.ratio, 2.0);
  // For m = 3 the approach is logarithmic in q; at q = 101 the ratio is
  // about 0.36.
  const auto c3 = second_moment_check(101, 3);
  EXPECT_GT(c3.ratio, 0.25);
  EXPECT_LT(c3.ratio, 4.0);
  EXPECT_THROW(second_moment_check(100, 3), DomainError);
}

TEST(Nonvanishing, DeskScaleShape) {
  ConfigScope scope(20);
  // The count is about q^2 here; the (log q)^3 / q^2 normalization only bounds
  // it from below at this scale.
  for (std::int64_t q : {101, 211}) {
    const auto r = count_nonvanishing(primitive(q, 3));
    EXPECT_EQ(r.certified, r.family_size);
    const double lq = std::log(static_cast<double>(q));
    EXPECT_GE(static_cast<double>(r.certified) * lq * lq * lq / static_cast<double>(q * q), 0.05);
  }
}

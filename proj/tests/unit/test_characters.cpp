#include <gtest/gtest.h>

#include <random>

#include "lerchz/arith.hpp"
#include "lerchz/characters.hpp"
#include "lerchz/errors.hpp"
#include "test_support.hpp"

using namespace lerchz;
using lerchz::testing::distance;
using lerchz::testing::ref;

TEST(UnitGroup, Structure) {
  const auto g1 = unit_group(1);
  EXPECT_EQ(g1->order(), 1);
  EXPECT_EQ(g1->rank(), 0U);

  const auto g8 = unit_group(8);
  ASSERT_EQ(g8->rank(), 2U);
  EXPECT_EQ(g8->orders(), (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(g8->generators(), (std::vector<std::int64_t>{7, 5}));

  const auto g7 = unit_group(7);
  ASSERT_EQ(g7->rank(), 1U);
  EXPECT_EQ(g7->orders()[0], 6);
  EXPECT_EQ(g7->generators()[0], 3);
}

TEST(UnitGroup, DlogRoundTripAndOrder) {
  for (std::int64_t q = 1; q <= 120; ++q) {
    const auto g = unit_group(q);
    std::int64_t product = 1;
    for (auto o : g->orders()) product *= o;
    EXPECT_EQ(product, totient(q)) << q;
    for (auto n : g->units()) EXPECT_EQ(g->from_exponents(g->dlog(n)), n % q) << q << " " << n;
  }
}

TEST(Characters, Counts) {
  EXPECT_EQ(enumerate_characters(5).size(), 4U);
  EXPECT_EQ(enumerate_characters(5, true).size(), 3U);
  EXPECT_EQ(enumerate_characters(1).size(), 1U);
  EXPECT_EQ(enumerate_characters(1, true).size(), 1U);
  for (std::int64_t q = 1; q <= 60; ++q)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_characters(q, true).size()), primitive_totient(q)) << q;
}

TEST(Characters, MultiplicativeAndUnimodular) {
  WorkingPrecision wp(30);
  for (std::int64_t q : {8, 9, 12, 15, 16, 21}) {
    for (const auto& chi : enumerate_characters(q)) {
      EXPECT_EQ(chi.value(1), Complex(1.0, 0.0));
      for (std::int64_t a = 0; a < q; ++a) {
        if (gcd(a, q) > 1) {
          EXPECT_FALSE(chi.angle(a).has_value());
          continue;
        }
        for (std::int64_t b = 0; b < q; ++b) {
          if (gcd(b, q) > 1) continue;
          EXPECT_EQ(frac(*chi.angle(a) + *chi.angle(b)), *chi.angle(a * b % q));
        }
      }
    }
  }
}

TEST(Characters, Orthogonality) {
  WorkingPrecision wp(40);
  for (std::int64_t q = 1; q <= 30; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      if (chi.is_principal()) continue;
      Complex sum;
      for (const auto& v : chi.values()) sum += v;
      EXPECT_LT(to_double(abs(sum)), q * 1e-38) << chi.describe();
    }
  }
}

TEST(Characters, IndexRoundTrip) {
  for (std::int64_t q : {1, 7, 24, 45}) {
    const auto all = enumerate_characters(q);
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].index(), static_cast<std::int64_t>(i));
  }
}

TEST(Characters, Conductor) {
  const auto principal = DirichletCharacter::trivial(12);
  EXPECT_EQ(principal.conductor(), 1);
  EXPECT_EQ(principal.primitive().modulus(), 1);

  // Character mod 6 equal to the Legendre symbol mod 3 on units.
  const auto leg3 = DirichletCharacter::quadratic(3);
  const auto chi6 = leg3.lift(6);
  EXPECT_EQ(chi6.conductor(), 3);
  const auto star = chi6.primitive();
  EXPECT_EQ(star, leg3);
  for (std::int64_t n : {1, 5}) EXPECT_EQ(*chi6.angle(n), *leg3.angle(n));

  for (const auto& chi : enumerate_characters(5, true)) EXPECT_EQ(chi.primitive(), chi);
}

TEST(Characters, ConductorConsistency) {
  for (std::int64_t q = 1; q <= 100; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      const auto star = chi.primitive();
      EXPECT_EQ(q % star.modulus(), 0);
      EXPECT_TRUE(star.is_primitive());
      for (std::int64_t n = 1; n < q; ++n) {
        if (gcd(n, q) != 1) continue;
        EXPECT_EQ(*chi.angle(n), *star.angle(n)) << chi.describe() << " at " << n;
      }
    }
  }
}

TEST(Characters, ProductsAndConjugates) {
  const auto a = DirichletCharacter::quadratic(4);
  const auto b = DirichletCharacter::quadratic(3);
  const auto ab = a * b;
  EXPECT_EQ(ab.modulus(), 12);
  EXPECT_TRUE(ab.is_primitive());
  for (std::int64_t n : {1, 5, 7, 11}) EXPECT_EQ(*ab.angle(n), frac(*a.angle(n) + *b.angle(n)));
  for (const auto& chi : enumerate_characters(13)) EXPECT_TRUE((chi * chi.conj()).is_principal());
}

TEST(Characters, Parse) {
  EXPECT_TRUE(parse_character(7, "trivial").is_principal());
  EXPECT_EQ(parse_character(5, "quadratic").order(), 2);
  EXPECT_EQ(parse_character(8, "1,1").exponents(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(parse_character(4, "1"), DirichletCharacter::quadratic(4));
  EXPECT_THROW(parse_character(5, "9"), ParseError);
  EXPECT_THROW(parse_character(8, "1,1,1"), ParseError);
  EXPECT_EQ(parse_character(8, "3").exponents(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_THROW(parse_character(8, "1,x"), ParseError);
}

TEST(GaussSum, Examples) {
  WorkingPrecision wp(40);
  const auto t3 = gauss_sum(DirichletCharacter::quadratic(3));
  EXPECT_TRUE(lerchz::testing::within_bound(t3, ref("0", "1.732050807568877293527446341505872366943"), 1e-39));
  const auto t4 = gauss_sum(DirichletCharacter::trivial(4));
  EXPECT_LE(to_double(abs(t4.value)), t4.err);
  for (const auto& chi : enumerate_characters(7, true)) {
    const auto t = gauss_sum(chi);
    EXPECT_LT(std::abs(to_double(abs(t.value)) - 2.6457513110645906), 1e-15);
  }
}

TEST(GaussSum, ModulusSquaredIsQForPrimitive) {
  WorkingPrecision wp(40);
  for (std::int64_t q = 1; q <= 50; ++q) {
    for (const auto& chi : enumerate_characters(q, true)) {
      const auto t = gauss_sum(chi);
      const auto n = norm(t);
      EXPECT_LE(to_double(abs(n.value - Complex(Real(q)))), n.err) << chi.describe();
    }
  }
}

TEST(GaussSum, PrincipalGivesMobius) {
  WorkingPrecision wp(40);
  for (std::int64_t q = 1; q <= 40; ++q) {
    const auto t = gauss_sum(DirichletCharacter::trivial(q));
    EXPECT_LE(distance(t.value, Complex(Real(mobius(q)))), t.err) << q;
  }
}

TEST(NuWeight, Examples) {
  WorkingPrecision wp(40);
  const Complex s(0.5, 1.0);
  const auto chi = DirichletCharacter::quadratic(5);
  const auto psi = DirichletCharacter::quadratic(3);
  const auto one = nu_weight(chi, psi, s, 1);
  EXPECT_LE(distance(one.value, Complex(1.0, 0.0)), one.err);

  const std::int64_t p = 7;
  const Complex ps = pow(Real(p), Complex(Real(1)) - s);
  const auto w1 = nu_weight(chi, psi, s, p);
  EXPECT_LT(distance(w1.value, ps * psi.value(p) - chi.value(p)), 1e-37);

  const auto w2 = nu_weight(chi, psi, s, p * p);
  const Complex expected2 = ps * ps * psi.value(p * p) - ps * psi.value(p) * chi.value(p);
  EXPECT_LT(distance(w2.value, expected2), 1e-36);
  EXPECT_THROW(nu_weight(chi, psi, s, 0), DomainError);
}

TEST(Fourier, TransformThenInverseIsIdentity) {
  WorkingPrecision wp(40);
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::int64_t q = 1; q <= 20; ++q) {
    const auto n = static_cast<std::size_t>(totient(q));
    std::vector<ComplexApprox> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(Complex(u(rng), u(rng)), 0.0);
    const auto back = inverse_character_transform(q, character_transform(q, f));
    ASSERT_EQ(back.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_LE(distance(back[i].value, f[i].value), back[i].err) << q;
  }
}

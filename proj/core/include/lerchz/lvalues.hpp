#pragma once

// Dirichlet L-values, twisted Hurwitz and twisted periodic zeta functions,
// and the Birch-Stevens transform relating Lerch values to L-values.

#include <cstdint>
#include <vector>

#include "lerchz/characters.hpp"
#include "lerchz/hurwitz_cache.hpp"
#include "lerchz/numeric.hpp"

namespace lerchz {

// L(chi, s) = q^(-s) sum_{a=1}^{q} chi(a) zeta(0, a/q, s). At s = 1 the
// regular parts are used, so non-principal characters are finite there.
ComplexApprox dirichlet_l(const DirichletCharacter& chi, const Complex& s, HurwitzCache* cache = nullptr);

struct TwistedHurwitzArg {
  DirichletCharacter chi;  // mod q
  std::int64_t b;          // 1 <= b <= ell
  std::int64_t ell;
  Complex s;

  TwistedHurwitzArg(DirichletCharacter chi, std::int64_t b, std::int64_t ell, Complex s);
};

enum class TwistedRoute {
  ResidueSplit,   // q^(-s) sum_{j < q} chi(b + j ell) zeta(0, (b + j ell)/(q ell), s)
  CharacterSum,   // tau(conj chi)^(-1) sum_a conj chi(a) e(ab/q) zeta(a ell/q, b/ell, s); chi primitive
};

// L(chi, b/ell, s) = ell^s sum_{n = b mod ell} chi(n) n^(-s), continued in s.
ComplexApprox twisted_hurwitz_l(const TwistedHurwitzArg& arg, TwistedRoute route = TwistedRoute::ResidueSplit,
                                HurwitzCache* cache = nullptr);

struct TwistedPeriodicArg {
  Rational alpha;
  DirichletCharacter psi;  // mod ell
  Complex s;
};

// L(alpha, psi, s) = sum_{n >= 1} e(n alpha) psi(n) n^(-s)
//   = ell^(-s) sum_{b=1}^{ell} psi(b) e(b alpha) zeta(ell alpha, b/ell, s).
ComplexApprox twisted_periodic_l(const TwistedPeriodicArg& arg);

// L(a/q, psi, s) for a = 0..q-1 from Hurwitz frequency rows.
std::vector<ComplexApprox> twisted_periodic_row(std::int64_t q, const DirichletCharacter& psi, const Complex& s,
                                                HurwitzCache* cache = nullptr);

// Values e(ab/q) zeta(a ell/q, b/ell, s) for a = 1..q, b = 1..ell, shared by
// all character pairs of a Birch-Stevens sweep.
class LerchGrid {
 public:
  LerchGrid(std::int64_t q, std::int64_t ell, Complex s);

  std::int64_t q() const { return q_; }
  std::int64_t ell() const { return ell_; }
  const Complex& s() const { return s_; }
  // Requires 1 <= a <= q and 1 <= b <= ell.
  const ComplexApprox& at(std::int64_t a, std::int64_t b) const;

 private:
  std::int64_t q_, ell_;
  Complex s_;
  std::vector<ComplexApprox> values_;
};

// sum_{a mod q} sum_{1 <= b <= ell} chi(a) psi(b) e(ab/q) zeta(a ell/q, b/ell, s).
ComplexApprox birch_stevens_lhs(const DirichletCharacter& chi, const DirichletCharacter& psi, const Complex& s,
                                const LerchGrid* grid = nullptr);
// ell^s tau(chi*) nu_s(chi*, psi, q/q*) L(conj(chi*) psi, s).
ComplexApprox birch_stevens_rhs(const DirichletCharacter& chi, const DirichletCharacter& psi, const Complex& s);

struct BirchStevensCheck {
  ComplexApprox lhs;
  ComplexApprox rhs;
  Agreement agreement;
};
BirchStevensCheck birch_stevens_residual(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                         const Complex& s, const LerchGrid* grid = nullptr);

}  // namespace lerchz

#include "lerchz/lvalues.hpp"

#include <cmath>
#include <optional>

#include "lerchz/arith.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lerch.hpp"

namespace lerchz {

namespace {

bool is_one(const Complex& s) { return s.re == 1 && s.im == 0; }


// Makes sure the cache matches (s, regular); returns a usable pointer.
HurwitzCache* matching_cache(HurwitzCache* cache, const Complex& s, bool regular, std::optional<HurwitzCache>& local) {
  if (cache != nullptr && cache->s() == s && cache->regular() == regular) return cache;
  local.emplace(s, regular);
  return &*local;
}

// Exact character sum over a set of residues, used to decide whether the
// pole at s = 1 cancels.
bool pole_cancels(const DirichletCharacter& chi, const std::vector<std::int64_t>& residues) {
  Complex total;
  for (std::int64_t n : residues) total += chi.value(n);
  return upper(total) < 1e-20;
}

}  // namespace

ComplexApprox dirichlet_l(const DirichletCharacter& chi, const Complex& s, HurwitzCache* cache) {
  const std::int64_t q = chi.modulus();
  const bool at_one = is_one(s);
  if (at_one && chi.is_principal()) throw PoleError("pole at s=1 for the principal character");
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, s, at_one, local);
  const auto values = chi.values();
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t a = 1; a <= q; ++a) {
    const Complex& v = values[static_cast<std::size_t>(a % q)];
    if (v.re == 0 && v.im == 0) continue;
    sum += cache->get(Rational(a, q)) * v;
  }
  return scale_by_power(sum, q, -s);
}

TwistedHurwitzArg::TwistedHurwitzArg(DirichletCharacter chi_, std::int64_t b_, std::int64_t ell_, Complex s_)
    : chi(std::move(chi_)), b(b_), ell(ell_), s(std::move(s_)) {
  if (ell < 1 || b < 1 || b > ell) throw DomainError("twisted Hurwitz argument needs 1 <= b <= ell");
}

namespace {

ComplexApprox twisted_residue_split(const TwistedHurwitzArg& arg, HurwitzCache* cache) {
  const std::int64_t q = arg.chi.modulus();
  const std::int64_t M = q * arg.ell;
  std::vector<std::int64_t> residues;
  for (std::int64_t j = 0; j < q; ++j) {
    const std::int64_t n = arg.b + j * arg.ell;
    if (arg.chi.angle_numerator(n) >= 0) residues.push_back(n);
  }
  const bool at_one = is_one(arg.s);
  if (at_one && !pole_cancels(arg.chi, residues)) throw PoleError("pole at s=1");
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, arg.s, at_one, local);
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t n : residues) sum += cache->get(Rational(n, M)) * arg.chi.value(n);
  return scale_by_power(sum, q, -arg.s);
}

ComplexApprox twisted_character_sum(const TwistedHurwitzArg& arg) {
  const std::int64_t q = arg.chi.modulus();
  const Rational c(arg.b, arg.ell);
  if (q == 1) return lerch_eval(LerchArgument(Rational(0), c, arg.s));
  if (!arg.chi.is_primitive()) throw DomainError("character-sum route needs a primitive character");
  const DirichletCharacter chibar = arg.chi.conj();
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t a = 1; a < q; ++a) {
    const auto angle = chibar.angle(a);
    if (!angle) continue;
    const Complex w = unit_root(*angle + Rational(a * arg.b, q));
    sum += lerch_eval(LerchArgument(Rational(a * arg.ell, q), c, arg.s)) * w;
  }
  return sum / gauss_sum(chibar);
}

}  // namespace

ComplexApprox twisted_hurwitz_l(const TwistedHurwitzArg& arg, TwistedRoute route, HurwitzCache* cache) {
  switch (route) {
    case TwistedRoute::ResidueSplit: return twisted_residue_split(arg, cache);
    case TwistedRoute::CharacterSum: return twisted_character_sum(arg);
  }
  throw DomainError("unknown twisted Hurwitz route");
}

ComplexApprox twisted_periodic_l(const TwistedPeriodicArg& arg) {
  const std::int64_t ell = arg.psi.modulus();
  const Rational alpha = frac(arg.alpha);
  const Rational freq = frac(alpha * ell);
  const bool regular = is_one(arg.s) && freq.numerator() == 0;
  if (regular) {
    // The Hurwitz poles carry the weight sum_b psi(b) e(b alpha).
    Complex weight;
    for (std::int64_t b = 1; b <= ell; ++b) {
      const auto angle = arg.psi.angle(b);
      if (angle) weight += unit_root(*angle + alpha * b);
    }
    if (upper(weight) > 1e-20) throw PoleError("pole at s=1");
  }
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t b = 1; b <= ell; ++b) {
    const auto angle = arg.psi.angle(b);
    if (!angle) continue;
    const Complex w = unit_root(*angle + alpha * b);
    const Rational c(b, ell);
    const ComplexApprox z = regular ? hurwitz_regular(c, arg.s) : lerch_eval(LerchArgument(freq, c, arg.s));
    sum += z * w;
  }
  return scale_by_power(sum, ell, -arg.s);
}

std::vector<ComplexApprox> twisted_periodic_row(std::int64_t q, const DirichletCharacter& psi, const Complex& s,
                                                HurwitzCache* cache) {
  if (q < 1) throw DomainError("row modulus must be positive");
  if (is_one(s)) throw DomainError("periodic rows are not available at s=1");
  const std::int64_t ell = psi.modulus();
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, s, false, local);
  std::vector<ComplexApprox> out(static_cast<std::size_t>(q), ComplexApprox(Complex(), 0.0));
  for (std::int64_t b = 1; b <= ell; ++b) {
    const auto angle = psi.angle(b);
    if (!angle) continue;
    const auto row = lerch_frequency_row(Rational(b, ell), s, q, cache);
    for (std::int64_t a = 0; a < q; ++a) {
      const Complex w = unit_root(*angle + Rational(a * b, q));
      out[static_cast<std::size_t>(a)] += row[static_cast<std::size_t>(mod(a * ell, q))] * w;
    }
  }
  for (auto& v : out) v = scale_by_power(v, ell, -s);
  return out;
}

LerchGrid::LerchGrid(std::int64_t q, std::int64_t ell, Complex s) : q_(q), ell_(ell), s_(std::move(s)) {
  if (q < 1 || ell < 1) throw DomainError("grid moduli must be positive");
  values_.assign(static_cast<std::size_t>(q * ell), ComplexApprox(Complex(), 0.0));
  // Only unit residues can carry a nonzero character weight.
  for (std::int64_t a = 1; a <= q; ++a) {
    if (gcd(a, q) != 1) continue;
    for (std::int64_t b = 1; b <= ell; ++b) {
      if (gcd(b, ell) != 1) continue;
      const ComplexApprox z = lerch_eval(LerchArgument(Rational(a * ell, q), Rational(b, ell), s_));
      values_[static_cast<std::size_t>((a - 1) * ell + (b - 1))] = z * unit_root(Rational(a * b, q));
    }
  }
}

const ComplexApprox& LerchGrid::at(std::int64_t a, std::int64_t b) const {
  return values_.at(static_cast<std::size_t>((a - 1) * ell_ + (b - 1)));
}

ComplexApprox birch_stevens_lhs(const DirichletCharacter& chi, const DirichletCharacter& psi, const Complex& s,
                                const LerchGrid* grid) {
  const std::int64_t q = chi.modulus(), ell = psi.modulus();
  std::optional<LerchGrid> local;
  if (grid == nullptr || grid->q() != q || grid->ell() != ell || !(grid->s() == s)) {
    local.emplace(q, ell, s);
    grid = &*local;
  }
  const auto cv = chi.values();
  const auto pv = psi.values();
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t a = 1; a <= q; ++a) {
    const Complex& x = cv[static_cast<std::size_t>(a % q)];
    if (x.re == 0 && x.im == 0) continue;
    for (std::int64_t b = 1; b <= ell; ++b) {
      const Complex& y = pv[static_cast<std::size_t>(b % ell)];
      if (y.re == 0 && y.im == 0) continue;
      sum += grid->at(a, b) * (x * y);
    }
  }
  return sum;
}

ComplexApprox birch_stevens_rhs(const DirichletCharacter& chi, const DirichletCharacter& psi, const Complex& s) {
  const DirichletCharacter star = chi.primitive();
  const std::int64_t t = chi.modulus() / star.modulus();
  const ComplexApprox nu = nu_weight(star, psi, s, t);
  if (nu.value == Complex() && nu.err == 0) return ComplexApprox(Complex(), 0.0);
  const ComplexApprox l = dirichlet_l(star.conj() * psi, s);
  return scale_by_power(gauss_sum(star) * nu * l, psi.modulus(), s);
}

BirchStevensCheck birch_stevens_residual(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                         const Complex& s, const LerchGrid* grid) {
  BirchStevensCheck out;
  out.lhs = birch_stevens_lhs(chi, psi, s, grid);
  out.rhs = birch_stevens_rhs(chi, psi, s);
  out.agreement = compare(out.lhs, out.rhs);
  return out;
}

}  // namespace lerchz

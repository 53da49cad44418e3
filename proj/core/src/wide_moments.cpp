#include "lerchz/wide_moments.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <optional>

#include "lerchz/arith.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz/parallel.hpp"

namespace lerchz {

namespace {

const Complex kHalf(0.5, 0.0);

HurwitzCache* matching_cache(HurwitzCache* cache, const Complex& s, std::optional<HurwitzCache>& local) {
  if (cache != nullptr && cache->s() == s && !cache->regular()) return cache;
  local.emplace(s, false);
  return &*local;
}

// Units b of Z/q as representatives in [1, q].
std::vector<std::int64_t> unit_representatives(std::int64_t q) {
  std::vector<std::int64_t> out;
  for (std::int64_t b = 1; b <= q; ++b)
    if (gcd(b, q) == 1) out.push_back(b);
  return out;
}

// Positions of distinct characters in a list, so repeated twists are
// evaluated once.
std::vector<std::size_t> distinct_slots(const std::vector<DirichletCharacter>& chars, std::vector<std::size_t>& first) {
  std::vector<std::size_t> slot(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::size_t j = 0;
    while (j < first.size() && !(chars[first[j]] == chars[i])) ++j;
    if (j == first.size()) first.push_back(i);
    slot[i] = j;
  }
  return slot;
}

ComplexApprox product(const std::vector<const ComplexApprox*>& factors) {
  ComplexApprox p(Complex(Real(1)), 0.0);
  for (const ComplexApprox* f : factors) p *= *f;
  return p;
}

ComplexApprox scaled(const ComplexApprox& v, const Real& factor) {
  return v * Complex(factor);
}

Real ipow_real(std::int64_t base, int e) {
  Real r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Complex scale_exponent(int m, const Complex& s) { return Complex(-s.re * m, -s.im * m); }

// L(psi_i, b, q, s) for every unit b of Z/q, indexed [i][unit position].
std::vector<std::vector<ComplexApprox>> short_side_terms(std::int64_t q, const std::vector<DirichletCharacter>& twists,
                                                         const std::vector<std::int64_t>& units, const Complex& s,
                                                         HurwitzCache* cache) {
  std::vector<std::size_t> first;
  const auto slot = distinct_slots(twists, first);
  std::vector<std::vector<ComplexApprox>> distinct(first.size());
  for (std::size_t j = 0; j < first.size(); ++j)
    for (std::int64_t b : units)
      distinct[j].push_back(twisted_hurwitz_l(TwistedHurwitzArg(twists[first[j]], b, q, s), TwistedRoute::ResidueSplit, cache));
  std::vector<std::vector<ComplexApprox>> out;
  out.reserve(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) out.push_back(distinct[slot[i]]);
  return out;
}

// sum_b chi(b) prod_{i in subset} terms[i][b].
ComplexApprox short_sum(const std::vector<std::vector<ComplexApprox>>& terms, const std::vector<std::size_t>& subset,
                        const DirichletCharacter& chi, const std::vector<std::int64_t>& units) {
  ComplexApprox sum(Complex(), 0.0);
  std::vector<const ComplexApprox*> factors(subset.size());
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t k = 0; k < subset.size(); ++k) factors[k] = &terms[subset[k]][u];
    sum += product(factors) * chi.value(units[u]);
  }
  return sum;
}

}  // namespace

// ---------------------------------------------------------------------------

WideMomentSpec::WideMomentSpec(std::int64_t q_, int m_)
    : q(q_), m(m_), chi(DirichletCharacter::trivial(q_)), twists(static_cast<std::size_t>(std::max(m_, 0)),
                                                                  DirichletCharacter::trivial(1)) {}

WideMomentSpec::WideMomentSpec(DirichletCharacter chi_, int m_, std::vector<DirichletCharacter> twists_)
    : q(chi_.modulus()), m(m_), chi(std::move(chi_)), twists(std::move(twists_)) {
  if (twists.empty()) twists.assign(static_cast<std::size_t>(std::max(m, 0)), DirichletCharacter::trivial(1));
}

void WideMomentSpec::validate() const {
  if (m < 2) throw DomainError("wide moments need m >= 2");
  if (q < 1 || chi.modulus() != q) throw DomainError("target character must be defined mod q");
  if (twists.size() != static_cast<std::size_t>(m)) throw DomainError("need exactly m twists");
}

CharacterIndex::CharacterIndex(std::int64_t q) : orders_(unit_group(q)->orders()) {
  for (std::int64_t o : orders_) size_ *= o;
}

std::int64_t CharacterIndex::multiply(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0, stride = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::int64_t o = orders_[i];
    out += ((a % o + b % o) % o) * stride;
    a /= o;
    b /= o;
    stride *= o;
  }
  return out;
}

std::int64_t CharacterIndex::inverse(std::int64_t a) const {
  std::int64_t out = 0, stride = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::int64_t o = orders_[i];
    out += ((o - a % o) % o) * stride;
    a /= o;
    stride *= o;
  }
  return out;
}

std::int64_t for_each_wide_tuple(const WideMomentSpec& spec,
                                 const std::function<void(const std::vector<std::int64_t>&)>& visit, std::int64_t cap) {
  spec.validate();
  const CharacterIndex index(spec.q);
  const std::int64_t phi = index.size();
  double total = 1;
  for (int i = 1; i < spec.m; ++i) total *= static_cast<double>(phi);
  if (total > static_cast<double>(cap)) throw CapacityError("wide family exceeds the enumeration cap");
  std::vector<bool> primitive(static_cast<std::size_t>(phi), true);
  if (spec.primitive_only)
    for (std::int64_t i = 0; i < phi; ++i)
      primitive[static_cast<std::size_t>(i)] = DirichletCharacter::from_index(spec.q, i).is_primitive();
  const std::int64_t target = spec.chi.index();
  const std::size_t m = static_cast<std::size_t>(spec.m);
  std::vector<std::int64_t> idx(m, 0);
  std::int64_t count = 0;
  for (;;) {
    std::int64_t prod = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) prod = index.multiply(prod, idx[i]);
    idx[m - 1] = index.multiply(target, index.inverse(prod));
    bool keep = true;
    if (spec.primitive_only)
      for (std::int64_t i : idx) keep = keep && primitive[static_cast<std::size_t>(i)];
    if (keep) {
      visit(idx);
      ++count;
    }
    std::size_t k = 0;
    while (k + 1 < m && ++idx[k] == phi) idx[k++] = 0;
    if (k + 1 >= m) break;
  }
  return count;
}

std::vector<std::vector<ComplexApprox>> twisted_character_lvalues(const WideMomentSpec& spec, HurwitzCache* cache) {
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, spec.s, local);
  const auto chars = enumerate_characters(spec.q);
  std::vector<std::size_t> first;
  const auto slot = distinct_slots(spec.twists, first);
  std::vector<std::vector<ComplexApprox>> distinct(first.size());
  for (std::size_t j = 0; j < first.size(); ++j)
    for (const auto& chi : chars) distinct[j].push_back(dirichlet_l(spec.twists[first[j]] * chi, spec.s, cache));
  std::vector<std::vector<ComplexApprox>> out;
  for (std::size_t i = 0; i < spec.twists.size(); ++i) out.push_back(distinct[slot[i]]);
  return out;
}

ComplexApprox wide_moment_brute(const WideMomentSpec& spec, std::int64_t cap) {
  spec.validate();
  const auto values = twisted_character_lvalues(spec);
  ComplexApprox sum(Complex(), 0.0);
  std::vector<const ComplexApprox*> factors(static_cast<std::size_t>(spec.m));
  for_each_wide_tuple(
      spec,
      [&](const std::vector<std::int64_t>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) factors[i] = &values[i][static_cast<std::size_t>(idx[i])];
        sum += product(factors);
      },
      cap);
  const std::int64_t base = spec.primitive_only ? primitive_totient(spec.q) : totient(spec.q);
  if (base == 0) return ComplexApprox(Complex(), 0.0);
  return scaled(sum, 1 / ipow_real(base, spec.m - 1));
}

ComplexApprox wide_moment_fourier(const WideMomentSpec& spec, HurwitzCache* cache) {
  spec.validate();
  if (spec.primitive_only) throw DomainError("the Fourier route covers the full family; use primitive_restriction");
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, spec.s, local);
  const auto units = unit_representatives(spec.q);
  const auto terms = short_side_terms(spec.q, spec.twists, units, spec.s, cache);
  std::vector<std::size_t> all(terms.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return scale_by_power(short_sum(terms, all, spec.chi, units), spec.q, scale_exponent(spec.m, spec.s));
}

ComplexApprox primitive_restriction(const WideMomentSpec& spec, HurwitzCache* cache) {
  spec.validate();
  const std::int64_t q = spec.q;
  if (!is_prime(q)) throw DomainError("inclusion-exclusion over primitive characters is implemented for prime q only");
  if (q == 2) return ComplexApprox(Complex(), 0.0);
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, spec.s, local);
  const auto units = unit_representatives(q);
  const auto terms = short_side_terms(q, spec.twists, units, spec.s, cache);
  const DirichletCharacter principal = DirichletCharacter::trivial(q);
  std::vector<ComplexApprox> B;
  for (const auto& psi : spec.twists) B.push_back(dirichlet_l(psi * principal, spec.s, cache));
  const std::int64_t phi = q - 1;
  const std::size_t m = static_cast<std::size_t>(spec.m);

  ComplexApprox total(Complex(), 0.0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ComplexApprox term(Complex(Real((std::popcount(mask) % 2) ? -1 : 1)), 0.0);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        term *= B[i];
      } else {
        rest.push_back(i);
      }
    }
    ComplexApprox F;
    if (rest.empty()) {
      F = ComplexApprox(Complex(Real(spec.chi.is_principal() ? 1 : 0)), 0.0);
    } else {
      const int k = static_cast<int>(rest.size());
      F = scale_by_power(short_sum(terms, rest, spec.chi, units), q, scale_exponent(k, spec.s));
      F = scaled(F, ipow_real(phi, k - 1));
    }
    total += term * F;
  }
  return scaled(total, 1 / ipow_real(q - 2, spec.m - 1));
}

ComplexApprox hurwitz_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis,
                             const DirichletCharacter& psi, const Complex& s, HurwitzCache* cache) {
  if (ell < 2) throw DomainError("hurwitz_moment needs ell >= 2");
  if (psi.modulus() != 1 && psi.modulus() != ell) throw DomainError("twist must be a character mod ell or mod 1");
  std::optional<HurwitzCache> local;
  cache = matching_cache(cache, s, local);
  std::vector<std::size_t> first;
  const auto slot = distinct_slots(chis, first);
  ComplexApprox sum(Complex(), 0.0);
  std::vector<ComplexApprox> distinct(first.size());
  std::vector<const ComplexApprox*> factors(chis.size());
  for (std::int64_t b = 1; b < ell; ++b) {
    const Complex w = psi.value(b);
    if (w.re == 0 && w.im == 0) continue;
    for (std::size_t j = 0; j < first.size(); ++j)
      distinct[j] = twisted_hurwitz_l(TwistedHurwitzArg(chis[first[j]], b, ell, s), TwistedRoute::ResidueSplit, cache);
    for (std::size_t i = 0; i < chis.size(); ++i) factors[i] = &distinct[slot[i]];
    sum += product(factors) * w;
  }
  return sum;
}

ComplexApprox hurwitz_power_moment(std::int64_t ell, int m, const Complex& s) {
  if (ell < 2 || m < 1) throw DomainError("hurwitz_power_moment needs ell >= 2 and m >= 1");
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t b = 1; b < ell; ++b) sum += pow(hurwitz_em(Rational(b, ell), s), static_cast<unsigned>(m));
  return sum;
}

ComplexApprox t_coefficient(std::int64_t d, const std::vector<DirichletCharacter>& twists, const Complex& s) {
  if (d < 1) throw DomainError("T(d) needs d >= 1");
  if (d == 1) return ComplexApprox(Complex(), 0.0);
  HurwitzCache cache(s);
  std::vector<std::size_t> first;
  const auto slot = distinct_slots(twists, first);
  std::vector<ComplexApprox> distinct(first.size());
  std::vector<const ComplexApprox*> factors(twists.size());
  ComplexApprox sum(Complex(), 0.0);
  for (std::int64_t b = 1; b < d; ++b) {
    const std::int64_t g = gcd(b, d);
    for (std::size_t j = 0; j < first.size(); ++j)
      distinct[j] = twisted_hurwitz_l(TwistedHurwitzArg(twists[first[j]], b / g, d / g, s), TwistedRoute::ResidueSplit,
                                      &cache);
    for (std::size_t i = 0; i < twists.size(); ++i) factors[i] = &distinct[slot[i]];
    sum += product(factors);
  }
  return scale_by_power(sum, d, scale_exponent(static_cast<int>(twists.size()), s));
}

MobiusIdentity mobius_identity(std::int64_t q, const std::vector<DirichletCharacter>& twists, const Complex& s,
                                     bool brute) {
  WideMomentSpec spec(DirichletCharacter::trivial(q), static_cast<int>(twists.size()), twists);
  spec.s = s;
  MobiusIdentity out;
  out.lhs = brute ? wide_moment_brute(spec) : wide_moment_fourier(spec);
  out.rhs = ComplexApprox(Complex(), 0.0);
  const Complex ms(s.re * spec.m, s.im * spec.m);
  for (std::int64_t d : divisors(q)) {
    const int mu = mobius(q / d);
    if (mu == 0) continue;
    const ComplexApprox t = scale_by_power(t_coefficient(d, twists, s), Rational(d, q), ms);
    if (mu > 0) {
      out.rhs += t;
    } else {
      out.rhs -= t;
    }
  }
  out.agreement = compare(out.lhs, out.rhs);
  return out;
}

ExpansionReport fit_expansion(int m, int K, const std::vector<std::int64_t>& moduli, const std::vector<double>& values) {
  if (K < 1) throw DomainError("expansion order K must be at least 1");
  if (moduli.size() != values.size()) throw DomainError("moduli and values differ in length");
  const std::size_t unknowns = static_cast<std::size_t>(K) + 1;
  if (moduli.size() < std::max<std::size_t>(2 * static_cast<std::size_t>(K), unknowns + 1))
    throw DomainError("ill-conditioned fit: too few moduli for K = " + std::to_string(K));
  Eigen::MatrixXd A(static_cast<Eigen::Index>(moduli.size()), static_cast<Eigen::Index>(unknowns));
  Eigen::VectorXd y(static_cast<Eigen::Index>(moduli.size()));
  for (std::size_t r = 0; r < moduli.size(); ++r) {
    const double d = static_cast<double>(moduli[r]);
    const auto row = static_cast<Eigen::Index>(r);
    A(row, 0) = 1;
    A(row, 1) = std::pow(d, 1 - m / 2.0) * std::log(d);
    for (int k = 1; k < K; ++k) A(row, k + 1) = std::pow(d, -k / 2.0);
    y(row) = values[r];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd x = svd.solve(y);
  const auto& sv = svd.singularValues();
  ExpansionReport out;
  out.m = m;
  out.K = K;
  out.moduli = moduli;
  out.main = x(0);
  out.log_coefficient = x(1);
  for (int k = 1; k < K; ++k) out.tail.push_back(x(k + 1));
  out.rms_residual = std::sqrt((A * x - y).squaredNorm() / static_cast<double>(moduli.size()));
  out.condition_number = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  return out;
}

ExpansionReport t_expansion(const std::vector<DirichletCharacter>& twists, std::int64_t a, int K,
                                    std::int64_t d_min, std::int64_t d_max, unsigned workers) {
  std::int64_t ell = 1;
  for (const auto& psi : twists) ell = lcm(ell, psi.modulus());
  std::vector<std::int64_t> moduli;
  for (std::int64_t p : primes_up_to(d_max))
    if (p >= d_min && mod(p, ell) == mod(a, ell)) moduli.push_back(p);
  const auto t = parallel_map<double>(moduli.size(), workers, [&](std::size_t i) {
    return to_double(t_coefficient(moduli[i], twists).value.re);
  });
  ExpansionReport out = fit_expansion(static_cast<int>(twists.size()), K, moduli, t);
  out.a = mod(a, ell);
  out.ell = ell;
  out.expected_main = to_double(predict_t_limit(d_max, twists).main.value.re);
  return out;
}

// ---------------------------------------------------------------------------
// Gauss-twisted moments

namespace {

struct GaussFactors {
  std::vector<std::vector<ComplexApprox>> rows;  // L(a/q, psi, s) per factor, a = 0..q-1
  std::vector<ComplexApprox> principal;          // principal-character coefficients B
};

GaussFactors gauss_factors(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists, const Complex& s) {
  HurwitzCache cache(s);
  GaussFactors out;
  const auto p = twisted_periodic_row(q, DirichletCharacter::trivial(1), s, &cache);
  const Complex one(Real(1));
  const Complex q1s = pow(Real(q), one - s);
  const ComplexApprox zeta = hurwitz_em(Rational(1), s);
  for (int i = 0; i < n; ++i) {
    out.rows.push_back(p);
    out.principal.push_back(zeta * (q1s - one));
  }
  for (const auto& psi : twists) {
    out.rows.push_back(twisted_periodic_row(q, psi, s, &cache));
    out.principal.push_back(dirichlet_l(psi, s, &cache) * (q1s * psi.value(q) - one));
  }
  return out;
}

}  // namespace

ComplexApprox gauss_twisted_moment(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                   const Complex& s) {
  if (q < 2 || n < 1) throw DomainError("gauss_twisted_moment needs q >= 2 and n >= 1");
  const auto f = gauss_factors(q, n, twists, s);
  ComplexApprox sum(Complex(), 0.0);
  std::vector<const ComplexApprox*> factors(f.rows.size());
  for (std::int64_t a = 1; a < q; ++a) {
    for (std::size_t i = 0; i < f.rows.size(); ++i) factors[i] = &f.rows[i][static_cast<std::size_t>(a)];
    sum += product(factors);
  }
  return sum;
}

ComplexApprox gauss_twisted_wide_lerch(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                       const Complex& s) {
  if (!is_prime(q) || q < 3) throw DomainError("the Gauss-twisted identity is implemented for odd prime q");
  if (n < 0 || n + static_cast<int>(twists.size()) < 1) throw DomainError("need at least one factor");
  const auto f = gauss_factors(q, n, twists, s);
  const std::size_t k = f.rows.size();
  const std::int64_t phi = q - 1;
  ComplexApprox total(Complex(), 0.0);
  std::vector<const ComplexApprox*> factors;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    ComplexApprox term(Complex(Real((std::popcount(mask) % 2) ? -1 : 1)), 0.0);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        term *= f.principal[i];
      } else {
        rest.push_back(i);
      }
    }
    ComplexApprox F(Complex(Real(1)), 0.0);
    if (!rest.empty()) {
      ComplexApprox sum(Complex(), 0.0);
      factors.resize(rest.size());
      for (std::int64_t a = 1; a < q; ++a) {
        for (std::size_t j = 0; j < rest.size(); ++j) factors[j] = &f.rows[rest[j]][static_cast<std::size_t>(a)];
        sum += product(factors);
      }
      F = scaled(sum, ipow_real(phi, static_cast<int>(rest.size()) - 1));
    }
    total += term * F;
  }
  return scaled(total, 1 / ipow_real(phi, static_cast<int>(k) - 1));
}

ComplexApprox gauss_twisted_wide_brute(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                       const Complex& s, std::int64_t cap) {
  const int k = n + static_cast<int>(twists.size());
  if (q < 2 || k < 1) throw DomainError("need q >= 2 and at least one factor");
  const auto chars = enumerate_characters(q);
  const CharacterIndex index(q);
  const std::int64_t phi = index.size();
  double total_tuples = 1;
  for (int i = 1; i < k; ++i) total_tuples *= static_cast<double>(phi);
  if (total_tuples > static_cast<double>(cap)) throw CapacityError("Gauss-twisted family exceeds the enumeration cap");

  HurwitzCache cache(s);
  std::vector<ComplexApprox> tau;
  for (const auto& chi : chars) tau.push_back(gauss_sum(chi.conj()));
  std::vector<std::vector<ComplexApprox>> A(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const DirichletCharacter psi = i < n ? DirichletCharacter::trivial(1) : twists[static_cast<std::size_t>(i - n)];
    if (i > 0 && i < n) {
      A[static_cast<std::size_t>(i)] = A[0];
      continue;
    }
    for (std::size_t c = 0; c < chars.size(); ++c)
      A[static_cast<std::size_t>(i)].push_back(
          chars[c].is_primitive() ? tau[c] * dirichlet_l(psi * chars[c], s, &cache) : ComplexApprox());
  }
  std::vector<bool> primitive(chars.size());
  for (std::size_t c = 0; c < chars.size(); ++c) primitive[c] = chars[c].is_primitive();

  ComplexApprox sum(Complex(), 0.0);
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<std::int64_t> idx(kk, 0);
  std::vector<const ComplexApprox*> factors(kk);
  for (;;) {
    std::int64_t prod = 0;
    for (std::size_t i = 0; i + 1 < kk; ++i) prod = index.multiply(prod, idx[i]);
    idx[kk - 1] = index.inverse(prod);
    bool keep = true;
    for (std::int64_t i : idx) keep = keep && primitive[static_cast<std::size_t>(i)];
    if (keep) {
      for (std::size_t i = 0; i < kk; ++i) factors[i] = &A[i][static_cast<std::size_t>(idx[i])];
      sum += product(factors);
    }
    std::size_t j = 0;
    while (j + 1 < kk && ++idx[j] == phi) idx[j++] = 0;
    if (j + 1 >= kk) break;
  }
  return scaled(sum, 1 / ipow_real(phi, k - 1));
}

// ---------------------------------------------------------------------------
// Double averages

ComplexApprox double_average_moment(std::int64_t q, std::int64_t ell, int m, const Complex& s, unsigned workers) {
  if (q < 2 || ell < 2 || m < 1) throw DomainError("double average needs q, ell >= 2 and m >= 1");
  const auto partial = parallel_map<ComplexApprox>(static_cast<std::size_t>(ell - 1), workers, [&](std::size_t i) {
    const std::int64_t b = static_cast<std::int64_t>(i) + 1;
    const auto row = lerch_frequency_row(Rational(b, ell), s, q);
    ComplexApprox sum(Complex(), 0.0);
    for (std::int64_t a = 1; a < q; ++a) sum += pow(norm(row[static_cast<std::size_t>(a)]), static_cast<unsigned>(m));
    return sum;
  });
  ComplexApprox total(Complex(), 0.0);
  for (const auto& p : partial) total += p;
  return total;
}

ComplexApprox double_average_character_side(std::int64_t q, std::int64_t ell, int m, const Complex& s) {
  if (!is_prime(q) || !is_prime(ell) || q == ell)
    throw DomainError("the character-side double average needs distinct primes q and ell");
  if (m < 1) throw DomainError("m must be positive");
  const auto chis = enumerate_characters(q);
  const auto psis = enumerate_characters(ell);
  const CharacterIndex iq(q), il(ell);
  const std::int64_t nq = iq.size(), nl = il.size(), G = nq * nl;
  const int k = 2 * m;
  double tuples = 1;
  for (int i = 1; i < k; ++i) tuples *= static_cast<double>(G);
  if (tuples > 1e6) throw CapacityError("character-side double average exceeds the enumeration cap");

  // What(chi, psi) = BS_rhs(conj chi, conj psi) / |G|, and its partner
  // conj(What(conj chi, conj psi)) = conj(BS_rhs(chi, psi)) / |G|.
  const Real inv_g = Real(1) / G;
  std::vector<ComplexApprox> V(static_cast<std::size_t>(G)), W(static_cast<std::size_t>(G));
  for (std::int64_t a = 0; a < nq; ++a)
    for (std::int64_t b = 0; b < nl; ++b) {
      const auto& chi = chis[static_cast<std::size_t>(a)];
      const auto& psi = psis[static_cast<std::size_t>(b)];
      V[static_cast<std::size_t>(a * nl + b)] = scaled(birch_stevens_rhs(chi.conj(), psi.conj(), s), inv_g);
      W[static_cast<std::size_t>(a * nl + b)] = scaled(conj(birch_stevens_rhs(chi, psi, s)), inv_g);
    }

  ComplexApprox sum(Complex(), 0.0);
  const std::size_t kk = static_cast<std::size_t>(k);
  std::vector<std::int64_t> idx(kk, 0);
  std::vector<const ComplexApprox*> factors(kk);
  for (;;) {
    std::int64_t pa = 0, pb = 0;
    for (std::size_t i = 0; i + 1 < kk; ++i) {
      pa = iq.multiply(pa, idx[i] / nl);
      pb = il.multiply(pb, idx[i] % nl);
    }
    idx[kk - 1] = iq.inverse(pa) * nl + il.inverse(pb);
    for (std::size_t i = 0; i < kk; ++i)
      factors[i] = i < static_cast<std::size_t>(m) ? &V[static_cast<std::size_t>(idx[i])] : &W[static_cast<std::size_t>(idx[i])];
    sum += product(factors);
    std::size_t j = 0;
    while (j + 1 < kk && ++idx[j] == G) idx[j++] = 0;
    if (j + 1 >= kk) break;
  }
  return scaled(sum, Real(G));
}

// ---------------------------------------------------------------------------
// Predictions

namespace {

DirichletCharacter product_character(const std::vector<DirichletCharacter>& chars) {
  DirichletCharacter out = DirichletCharacter::trivial(1);
  for (const auto& c : chars) out = out * c;
  return out;
}

Complex real_complex(double x) { return Complex(Real(x), Real(0)); }

}  // namespace

Prediction predict_character_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis) {
  const int m = static_cast<int>(chis.size());
  const Complex half_m = real_complex(m / 2.0);
  Prediction p;
  p.main = scale_by_power(dirichlet_l(product_character(chis), half_m), ell, half_m);
  const double l = static_cast<double>(ell);
  p.shape = std::pow(l, m / 2.0 - 0.5) + l * std::log(l);
  return p;
}

Prediction predict_twisted_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis,
                             const DirichletCharacter& psi, double eps) {
  const int m = static_cast<int>(chis.size());
  const Complex half_m = real_complex(m / 2.0);
  std::int64_t qstar = 1;
  for (const auto& c : chis) qstar = std::max(qstar, c.modulus());
  Prediction p;
  p.main = scale_by_power(dirichlet_l(product_character(chis) * psi, half_m), ell, half_m);
  const double l = static_cast<double>(ell), qs = static_cast<double>(qstar);
  p.shape = std::pow(qs, m / 4.0 + eps) * l + std::pow(qs, 0.25 + eps) * std::pow(l, m / 2.0 - 0.5 + eps);
  return p;
}

Prediction predict_power_moment(std::int64_t ell, int m) {
  if (m < 3) throw DomainError("power-moment prediction needs m >= 3");
  const Complex half_m = real_complex(m / 2.0);
  Prediction p;
  p.main = scale_by_power(hurwitz_em(Rational(1), half_m), ell, half_m);
  const double l = static_cast<double>(ell);
  p.shape = std::pow(l, m / 2.0 - 0.5) + l * std::log(l);
  return p;
}

Prediction predict_gauss_twisted(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists, double eps) {
  if (n < 3) throw DomainError("Gauss-twisted prediction needs n >= 3");
  const Complex half(0.5, 0.0);
  ComplexApprox main(pow(Complex(0.5, 0.5), static_cast<unsigned>(n)), 0.0);
  main = main * hurwitz_em(Rational(1), real_complex(n / 2.0));
  for (const auto& psi : twists) main = main * dirichlet_l(psi, half);
  Prediction p;
  p.main = scale_by_power(main, q, real_complex(n / 2.0));
  p.shape = std::pow(static_cast<double>(q), n / 2.0 - 0.5 + eps);
  return p;
}

Prediction predict_gauss_twisted_two_sided(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                           double eps) {
  if (n < 3) throw DomainError("Gauss-twisted prediction needs n >= 3");
  const Complex half(0.5, 0.0);
  const Complex ends = pow(Complex(0.5, 0.5), static_cast<unsigned>(n)) + pow(Complex(0.5, -0.5), static_cast<unsigned>(n));
  ComplexApprox main = hurwitz_em(Rational(1), real_complex(n / 2.0)) * ends;
  for (const auto& psi : twists) main = main * dirichlet_l(psi, half);
  Prediction p;
  p.main = scale_by_power(main, q, real_complex(n / 2.0));
  p.shape = std::pow(static_cast<double>(q), n / 2.0 - 0.5 + eps);
  return p;
}

Prediction predict_double_average(std::int64_t q, std::int64_t ell, int m) {
  if (m < 2) throw DomainError("double-average prediction needs m >= 2");
  const ComplexApprox zeta = hurwitz_em(Rational(1), real_complex(m));
  const Real a = ipow_real(q, m) * (ell - 1) / ipow_real(2, m - 1);
  const Real b = ipow_real(ell, m) * (q - 1);
  Prediction p;
  p.main = scaled(zeta, a + b);
  const double qd = static_cast<double>(q), ld = static_cast<double>(ell);
  p.shape = std::pow(qd, m - 0.5) * ld + qd * std::pow(ld, m - 0.5);
  return p;
}

Prediction predict_t_limit(std::int64_t d, const std::vector<DirichletCharacter>& twists) {
  const int m = static_cast<int>(twists.size());
  Prediction p;
  p.main = dirichlet_l(product_character(twists), real_complex(m / 2.0));
  p.shape = 1 / std::sqrt(static_cast<double>(d));
  return p;
}

}  // namespace lerchz

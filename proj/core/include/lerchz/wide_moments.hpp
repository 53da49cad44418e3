#pragma once

// Wide moments of Dirichlet L-functions: the finite Fourier identity relating
// sums over character tuples with fixed product to short sums of twisted
// Hurwitz values, the moment sums over Lerch values, and their predicted
// main terms.

#include <cstdint>
#include <functional>
#include <vector>

#include "lerchz/characters.hpp"
#include "lerchz/hurwitz_cache.hpp"
#include "lerchz/numeric.hpp"

namespace lerchz {

struct WideMomentSpec {
  std::int64_t q;
  int m;
  DirichletCharacter chi;                  // target character mod q
  std::vector<DirichletCharacter> twists;  // psi_1..psi_m
  bool primitive_only = false;
  Complex s = Complex(0.5, 0.0);

  // Trivial twists and trivial target unless given.
  WideMomentSpec(std::int64_t q, int m);
  WideMomentSpec(DirichletCharacter chi, int m, std::vector<DirichletCharacter> twists = {});

  void validate() const;
};

// Indices into enumerate_characters(q) with exponent-vector arithmetic.
class CharacterIndex {
 public:
  explicit CharacterIndex(std::int64_t q);
  std::int64_t size() const { return size_; }
  std::int64_t multiply(std::int64_t a, std::int64_t b) const;
  std::int64_t inverse(std::int64_t a) const;

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t size_ = 1;
};

// Calls visit(indices) for every tuple in Wide(q, m; chi), or Wide* when
// primitive_only; returns the family size. Throws CapacityError when
// phi(q)^(m-1) exceeds the cap.
std::int64_t for_each_wide_tuple(const WideMomentSpec& spec, const std::function<void(const std::vector<std::int64_t>&)>& visit,
                                 std::int64_t cap = 1000000);

// L(psi_i chi, s) for every twist i and every character chi mod q, indexed
// [i][chi index].
std::vector<std::vector<ComplexApprox>> twisted_character_lvalues(const WideMomentSpec& spec,
                                                                  HurwitzCache* cache = nullptr);

// Normalized wide moment (1/N) sum over the family of prod_i L(psi_i chi_i, s)
// with N = phi(q)^(m-1), or phi*(q)^(m-1) for the primitive family.
ComplexApprox wide_moment_brute(const WideMomentSpec& spec, std::int64_t cap = 1000000);
// The same normalized moment for the full family from the short side
//   q^(-ms) sum_{b mod q, (b,q)=1} chi(b) prod_i L(psi_i, b/q, s).
ComplexApprox wide_moment_fourier(const WideMomentSpec& spec, HurwitzCache* cache = nullptr);
// Primitive family for prime q by inclusion-exclusion over the principal
// character positions, assembled from full-family moments of lower width.
ComplexApprox primitive_restriction(const WideMomentSpec& spec, HurwitzCache* cache = nullptr);

// sum_{b=1}^{ell-1} psi(b) prod_i L(chi_i, b/ell, s).
ComplexApprox hurwitz_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis,
                             const DirichletCharacter& psi, const Complex& s = Complex(0.5, 0.0),
                             HurwitzCache* cache = nullptr);
// sum_{b=1}^{ell-1} zeta(0, b/ell, s)^m.
ComplexApprox hurwitz_power_moment(std::int64_t ell, int m, const Complex& s = Complex(0.5, 0.0));

// T(d) = d^(-ms) sum_{b=1}^{d-1} prod_i L(psi_i, b'/d', s), b'/d' = b/d reduced.
ComplexApprox t_coefficient(std::int64_t d, const std::vector<DirichletCharacter>& twists,
                          const Complex& s = Complex(0.5, 0.0));

struct MobiusIdentity {
  ComplexApprox lhs;  // normalized wide moment over Wide(q, m; 1)
  ComplexApprox rhs;  // sum_{d | q} mu(q/d) (d/q)^(ms) T(d)
  Agreement agreement;
};
MobiusIdentity mobius_identity(std::int64_t q, const std::vector<DirichletCharacter>& twists,
                                     const Complex& s = Complex(0.5, 0.0), bool brute = true);

struct ExpansionReport {
  std::int64_t a = 0;    // residue class of the moduli
  std::int64_t ell = 1;  // lcm of the twist moduli
  int m = 0;
  int K = 0;
  std::vector<std::int64_t> moduli;
  // Fit of T(d) in the basis 1, d^(1-m/2) log d, d^(-k/2) for k = 1..K-1.
  double main = 0;
  double log_coefficient = 0;
  std::vector<double> tail;
  double rms_residual = 0;
  double condition_number = 0;
  double expected_main = 0;  // Re L(psi_1...psi_m, m/2)
};
// Least-squares coefficients from precomputed real parts of T(d).
ExpansionReport fit_expansion(int m, int K, const std::vector<std::int64_t>& moduli, const std::vector<double>& values);
// Computes T(d) for primes d = a mod ell in [d_min, d_max] and fits.
ExpansionReport t_expansion(const std::vector<DirichletCharacter>& twists, std::int64_t a, int K,
                                    std::int64_t d_min, std::int64_t d_max, unsigned workers = 1);

// Gauss-twisted moment sum_{a=1}^{q-1} (e(a/q) zeta(a/q, 1, s))^n prod_i L(a/q, psi_i, s).
ComplexApprox gauss_twisted_moment(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                   const Complex& s = Complex(0.5, 0.0));
// Normalized primitive wide moment twisted by Gauss sums over Wide*(q, n + m; 1):
//   (1/phi^(n+m-1)) sum prod_{i<=n} tau(conj chi_i) L(chi_i, s) prod_{i<=m} tau(conj chi_{n+i}) L(psi_i chi_{n+i}, s),
// by enumeration (brute) and from Lerch-side sums by inclusion-exclusion.
ComplexApprox gauss_twisted_wide_brute(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                       const Complex& s = Complex(0.5, 0.0), std::int64_t cap = 1000000);
ComplexApprox gauss_twisted_wide_lerch(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                       const Complex& s = Complex(0.5, 0.0));

// sum_{a=1}^{q-1} sum_{b=1}^{ell-1} |zeta(a/q, b/ell, s)|^(2m).
ComplexApprox double_average_moment(std::int64_t q, std::int64_t ell, int m, const Complex& s = Complex(0.5, 0.0),
                                    unsigned workers = 1);
// For distinct primes q, ell the same sum from Birch-Stevens L-value data:
// |G| sum over 2m-tuples in the dual of G = (Z/q)^x x (Z/ell)^x with trivial
// product of prod_{i<=m} What(g_i) prod_{i>m} conj(What(conj g_i)).
ComplexApprox double_average_character_side(std::int64_t q, std::int64_t ell, int m,
                                            const Complex& s = Complex(0.5, 0.0));

// Predicted main term with the shape of the error term; the envelope is
// constant * shape.
struct Prediction {
  ComplexApprox main;
  double shape = 0;
};
Prediction predict_character_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis);
Prediction predict_twisted_moment(std::int64_t ell, const std::vector<DirichletCharacter>& chis,
                             const DirichletCharacter& psi, double eps = 0.05);
Prediction predict_power_moment(std::int64_t ell, int m);
Prediction predict_gauss_twisted(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists, double eps = 0.05);
// The stated term only accounts for the singularity of e(a/q) zeta(a/q, 1, s)
// at a/q -> 0. The end a/q -> 1 contributes ((1-i)/2)^n zeta(n/2)
// prod L(psi_i, 1/2) q^(n/2) as well; this variant includes both ends.
Prediction predict_gauss_twisted_two_sided(std::int64_t q, int n, const std::vector<DirichletCharacter>& twists,
                                           double eps = 0.05);
Prediction predict_double_average(std::int64_t q, std::int64_t ell, int m);
// Limit L(psi_1...psi_m, m/2) of T(d) with shape d^(-1/2).
Prediction predict_t_limit(std::int64_t d, const std::vector<DirichletCharacter>& twists);

}  // namespace lerchz

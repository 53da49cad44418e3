#pragma once

// Dirichlet characters encoded by exponent vectors against a fixed generator
// set of (Z/qZ)^x.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lerchz/numeric.hpp"

namespace lerchz {

class UnitGroup {
 public:
  explicit UnitGroup(std::int64_t q);

  std::int64_t modulus() const { return q_; }
  std::int64_t order() const { return order_; }
  // Least common multiple of the generator orders.
  std::int64_t exponent() const { return exponent_; }
  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return generators_.size(); }

  bool is_unit(std::int64_t n) const;
  // Exponent vector of n against the generators; n must be a unit.
  std::vector<std::int64_t> dlog(std::int64_t n) const;
  std::int64_t dlog_component(std::int64_t n, std::size_t i) const;
  std::int64_t from_exponents(const std::vector<std::int64_t>& e) const;
  // Units in increasing order.
  std::vector<std::int64_t> units() const;

 private:
  std::int64_t q_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> orders_;
  // Row-major q x rank table; rows of non-units are -1.
  std::vector<std::int32_t> table_;
};

// Shared instance for modulus q; groups are immutable so sharing is safe.
std::shared_ptr<const UnitGroup> unit_group(std::int64_t q);

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents);

  static DirichletCharacter trivial(std::int64_t q);
  // First primitive character of order 2 mod q in enumeration order.
  static DirichletCharacter quadratic(std::int64_t q);
  // Character at the given position of the lexicographic enumeration.
  static DirichletCharacter from_index(std::int64_t q, std::int64_t index);

  std::int64_t modulus() const { return group_->modulus(); }
  const UnitGroup& group() const { return *group_; }
  const std::shared_ptr<const UnitGroup>& group_ptr() const { return group_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  // Position in the lexicographic enumeration of all characters mod q.
  std::int64_t index() const;

  // chi(n) = e(angle); nullopt when gcd(n, q) > 1.
  std::optional<Rational> angle(std::int64_t n) const;
  // Numerator of the angle over group().exponent(); -1 for non-units.
  std::int64_t angle_numerator(std::int64_t n) const;
  Complex value(std::int64_t n) const;
  // chi(0), ..., chi(q - 1).
  std::vector<Complex> values() const;

  bool is_principal() const;
  bool is_even() const;
  std::int64_t order() const;
  DirichletCharacter conj() const;
  // Character mod a multiple of the modulus inducing the same values on units.
  DirichletCharacter lift(std::int64_t multiple) const;
  // Restriction to modulus d | q; requires chi to be trivial on units
  // congruent to 1 mod d.
  DirichletCharacter restrict_to(std::int64_t d) const;

  std::int64_t conductor() const;
  DirichletCharacter primitive() const;
  bool is_primitive() const { return conductor() == modulus(); }

  std::string describe() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<std::int64_t> exponents_;
};

// Product character; different moduli are lifted to their lcm.
DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q, bool primitive_only = false);

// Parses "trivial", "quadratic", an enumeration index, or a comma-separated
// exponent vector.
DirichletCharacter parse_character(std::int64_t q, const std::string& text);

// tau(chi) = sum over a mod q of chi(a) e(a/q).
ComplexApprox gauss_sum(const DirichletCharacter& chi);

// nu_s(chi*, psi, t) = sum over d | t of d^(1-s) psi(d) mu(t/d) chi*(t/d).
ComplexApprox nu_weight(const DirichletCharacter& chi_star, const DirichletCharacter& psi, const Complex& s,
                        std::int64_t t);

// Fourier analysis on (Z/q)^x. Functions are given on units in increasing
// order; transforms are indexed by character enumeration order.
//   fhat(chi) = (1/phi) sum_a f(a) conj(chi(a)),  f(a) = sum_chi fhat(chi) chi(a).
std::vector<ComplexApprox> character_transform(std::int64_t q, const std::vector<ComplexApprox>& f);
std::vector<ComplexApprox> inverse_character_transform(std::int64_t q, const std::vector<ComplexApprox>& fhat);

}  // namespace lerchz

#pragma once

// Elementary multiplicative number theory on 64-bit integers.

#include <cstdint>
#include <utility>
#include <vector>

namespace lerchz {

struct PrimePower {
  std::int64_t p;
  int k;
};

// Prime factorization by trial division, primes in increasing order.
std::vector<PrimePower> factorize(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);
// Sorted list of positive divisors.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);
std::int64_t totient(std::int64_t n);
// Number of primitive characters mod q: sum over d | q of mu(q/d) phi(d).
std::int64_t primitive_totient(std::int64_t q);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
// Nonnegative residue of a mod m.
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m);
// Inverse of a mod m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, int e);

}  // namespace lerchz

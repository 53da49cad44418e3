#include "lerchz/arith.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "lerchz/errors.hpp"

namespace lerchz {

std::vector<PrimePower> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
  for (std::int64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::int64_t k = p * p; k <= n; k += p) composite[k] = true;
  }
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t size = out.size();
    std::int64_t pk = 1;
    for (int j = 1; j <= k; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::int64_t n) {
  int sign = 1;
  for (const auto& f : factorize(n)) {
    if (f.k > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t out = n;
  for (const auto& f : factorize(n)) out = out / f.p * (f.p - 1);
  return out;
}

std::int64_t primitive_totient(std::int64_t q) {
  // Multiplicative: p -> p - 2, p^k (k >= 2) -> p^(k-2) (p - 1)^2.
  std::int64_t out = 1;
  for (const auto& [p, k] : factorize(q)) {
    if (k == 1)
      out *= p - 2;
    else
      out *= ipow(p, k - 2) * (p - 1) * (p - 1);
  }
  return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __extension__ using wide = __int128;
  return static_cast<std::int64_t>(static_cast<wide>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, m);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = mod(a, m), t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) throw DomainError("inverse_mod: not invertible");
  return mod(t0, m);
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace lerchz

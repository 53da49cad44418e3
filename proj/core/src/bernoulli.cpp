#include "lerchz/bernoulli.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lerchz/errors.hpp"

namespace lerchz {

namespace {

std::mutex exact_mutex;
std::vector<BigRational> exact_table{BigRational(1)};

std::mutex scaled_mutex;
std::map<unsigned, std::shared_ptr<const std::vector<Real>>> scaled_tables;

void extend_exact(unsigned k) {
  // Row n of Pascal's triangle is kept so each new B_n costs O(n).
  static std::vector<boost::multiprecision::mpz_int> binom{1, 1};
  while (exact_table.size() <= k) {
    const auto n = static_cast<unsigned>(exact_table.size());
    // binom currently holds row n; advance to row n + 1.
    std::vector<boost::multiprecision::mpz_int> next(n + 2);
    next[0] = 1;
    next[n + 1] = 1;
    for (unsigned j = 1; j <= n; ++j) next[j] = binom[j - 1] + binom[j];
    binom = std::move(next);
    if (n > 1 && n % 2 == 1) {
      exact_table.emplace_back(0);
      continue;
    }
    BigRational sum(0);
    for (unsigned j = 0; j < n; ++j) {
      if (exact_table[j] == 0) continue;
      sum += BigRational(binom[j]) * exact_table[j];
    }
    exact_table.push_back(-sum / BigRational(n + 1));
  }
}

}  // namespace

BigRational bernoulli_exact(unsigned k) {
  std::lock_guard<std::mutex> lock(exact_mutex);
  extend_exact(k);
  return exact_table[k];
}

std::shared_ptr<const std::vector<Real>> bernoulli_scaled(unsigned K) {
  const unsigned bits = working_bits();
  {
    std::lock_guard<std::mutex> lock(scaled_mutex);
    auto it = scaled_tables.find(bits);
    if (it != scaled_tables.end() && it->second->size() > K) return it->second;
  }
  // Grow in chunks to keep rebuilds rare.
  const unsigned size = std::max(K + 1, 64U) + 32U;
  std::vector<BigRational> exact;
  {
    std::lock_guard<std::mutex> lock(exact_mutex);
    extend_exact(size);
    exact.assign(exact_table.begin(), exact_table.begin() + size);
  }
  auto table = std::make_shared<std::vector<Real>>(size);
  BigRational factorial(1);
  for (unsigned k = 0; k < size; ++k) {
    if (k > 0) factorial *= k;
    const BigRational v = exact[k] / factorial;
    Real num(boost::multiprecision::numerator(v).str());
    Real den(boost::multiprecision::denominator(v).str());
    (*table)[k] = num / den;
  }
  std::lock_guard<std::mutex> lock(scaled_mutex);
  auto& slot = scaled_tables[bits];
  if (!slot || slot->size() < table->size()) slot = table;
  return slot;
}

Real bernoulli_polynomial(unsigned k, const Real& x) {
  // B_k(x) = sum_j binom(k, j) B_j x^(k - j)
  Real result(0);
  Real binom(1);
  for (unsigned j = 0; j <= k; ++j) {
    const BigRational b = bernoulli_exact(j);
    if (b != 0) {
      Real bj = Real(boost::multiprecision::numerator(b).str()) / Real(boost::multiprecision::denominator(b).str());
      result += binom * bj * boost::multiprecision::pow(x, k - j);
    }
    binom = binom * (k - j) / (j + 1);
  }
  return result;
}

double periodic_bernoulli_sup(unsigned k) {
  if (k == 0) return 1.0;
  if (k == 1) return 0.5;
  // |B_k(x)| <= 2 zeta(k) k! / (2 pi)^k and zeta(k) <= zeta(2) < 2.
  return round_up(4.0 * std::pow(2.0 * M_PI, -static_cast<double>(k)));
}

}  // namespace lerchz

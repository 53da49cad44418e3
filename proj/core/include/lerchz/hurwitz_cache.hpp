#pragma once

// Memo of Hurwitz zeta values zeta(0, c, s) for one fixed s, keyed by the
// exact rational c. Safe for concurrent readers and writers; a value may be
// computed twice under contention but both results are identical.

#include <shared_mutex>
#include <unordered_map>

#include "lerchz/numeric.hpp"

namespace lerchz {

class HurwitzCache {
 public:
  // With regular = true the cache stores zeta(0, c, s) - 1/(s - 1).
  explicit HurwitzCache(Complex s, bool regular = false);

  const Complex& s() const { return s_; }
  bool regular() const { return regular_; }
  ComplexApprox get(const Rational& c);
  std::size_t size() const;

 private:
  struct Hash {
    std::size_t operator()(const Rational& r) const noexcept;
  };

  Complex s_;
  bool regular_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Rational, ComplexApprox, Hash> values_;
};

}  // namespace lerchz

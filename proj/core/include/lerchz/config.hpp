#pragma once

#include <cstddef>

namespace lerchz {

// Accuracy and truncation limits shared by all evaluators.
struct PrecisionConfig {
  unsigned digits = 40;  // requested decimal digits P
  unsigned guard = 10;   // extra working digits used internally
  double target_error = 0;  // absolute target; 0 means 10^(5 - P)
  std::size_t max_series_terms = 4'000'000;
  unsigned max_em_order = 400;
  unsigned max_quadrature_level = 12;
  double delta = 0.05;  // absolute convergence of a Dirichlet series needs Re s > 1 + delta

  double target() const;
  unsigned working_digits() const { return digits + guard; }
};

// Configuration in effect for the calling scope, see ConfigScope.
const PrecisionConfig& current_config();

// Installs a configuration and the matching working precision for the
// lifetime of the scope. Scopes nest; the innermost one wins.
class ConfigScope {
 public:
  explicit ConfigScope(const PrecisionConfig& config);
  explicit ConfigScope(unsigned digits);
  ~ConfigScope();
  ConfigScope(const ConfigScope&) = delete;
  ConfigScope& operator=(const ConfigScope&) = delete;

 private:
  PrecisionConfig saved_;
  unsigned saved_digits_;
};

}  // namespace lerchz

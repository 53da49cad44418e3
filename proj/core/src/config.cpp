#include "lerchz/config.hpp"

#include <cmath>

#include "lerchz/errors.hpp"
#include "lerchz/numeric.hpp"

namespace lerchz {

namespace {
// The mpfr default of 50 working digits matches the default configuration.
PrecisionConfig active;
}  // namespace

double PrecisionConfig::target() const {
  if (target_error > 0) return target_error;
  return std::pow(10.0, 5.0 - static_cast<double>(digits));
}

const PrecisionConfig& current_config() {
  return active;
}

ConfigScope::ConfigScope(const PrecisionConfig& config) : saved_(active), saved_digits_(0) {
  saved_digits_ = Real::default_precision();
  if (config.digits < 10) throw DomainError("precision must be at least 10 digits");
  // The target must stay at least 10 ulps above the working precision.
  if (config.target() < 10 * std::pow(10.0, -static_cast<double>(config.digits)))
    throw DomainError("target error below 10 ulps of the working precision");
  active = config;
  Real::default_precision(config.working_digits());
}

ConfigScope::ConfigScope(unsigned digits)
    : ConfigScope([digits] {
        PrecisionConfig c;
        c.digits = digits;
        return c;
      }()) {}

ConfigScope::~ConfigScope() {
  active = saved_;
  Real::default_precision(saved_digits_);
}

}  // namespace lerchz

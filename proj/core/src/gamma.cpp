#include "lerchz/gamma.hpp"

#include <cmath>

#include "lerchz/bernoulli.hpp"
#include "lerchz/errors.hpp"

namespace lerchz {

namespace {

bool is_nonpositive_integer(const Complex& s) {
  return s.im == 0 && s.re <= 0 && boost::multiprecision::floor(s.re) == s.re;
}

struct LogGamma {
  Complex log_value;  // log Gamma(s + N) by Stirling, before dividing out the shift
  Complex shift;      // s (s + 1) ... (s + N - 1)
  double log_err;     // absolute error of log_value
  double shift_rel;   // relative error of shift
};

LogGamma stirling(const Complex& s) {
  const double digits = working_digits();
  // Stirling's series reaches 10^-digits once |z| exceeds about
  // digits * ln(10) / (2 pi); a margin keeps the term count small.
  const double radius = 0.45 * digits + 8;
  const double sr = to_double(s.re);
  const double si = std::fabs(to_double(s.im));
  unsigned N = 0;
  if (std::hypot(std::max(sr, 0.0), si) < radius || sr < 1) {
    const double need = std::sqrt(std::max(radius * radius - si * si, 0.0));
    N = static_cast<unsigned>(std::max(0.0, std::ceil(std::max(need, 1.0) - sr)));
  }
  Complex shift(Real(1));
  for (unsigned j = 0; j < N; ++j) shift *= s + Complex(Real(j));
  const Complex z = s + Complex(Real(N));

  const double zabs = to_double(abs(z));
  const double arg = std::atan2(to_double(z.im), to_double(z.re));
  // Remainder after M terms is at most the next term times sec^(2M+2)(arg/2).
  const double sec = 1.0 / std::cos(arg / 2);
  const double target = std::pow(10.0, -digits - 2);

  const Complex log_z = log(z);
  Complex value = (z - Complex(Real(0.5))) * log_z - z + Complex(boost::multiprecision::log(two_pi()) / 2);
  double log_err = upper(value) * 16 * unit_roundoff();

  const Complex inv_z = Complex(Real(1)) / z;
  const Complex inv_z2 = inv_z * inv_z;
  Complex power = inv_z;
  unsigned M = 1;
  for (;; ++M) {
    if (2 * M + 2 > 2000) throw ConvergenceError("Stirling series did not converge");
    const BigRational b = bernoulli_exact(2 * M);
    const Real coef = Real(boost::multiprecision::numerator(b).str()) /
                      (Real(boost::multiprecision::denominator(b).str()) * (2 * M) * (2 * M - 1));
    value += power * coef;
    power *= inv_z2;
    const BigRational bn = bernoulli_exact(2 * M + 2);
    const double next = std::fabs(bn.convert_to<double>()) / ((2.0 * M + 2) * (2.0 * M + 1)) *
                        std::pow(zabs, -(2.0 * M + 1)) * std::pow(sec, 2.0 * M + 2);
    if (next < target) {
      log_err += next;
      break;
    }
  }
  log_err += upper(value) * (M + 8) * unit_roundoff();
  return {value, shift, round_up(log_err), (N + 4) * 4 * unit_roundoff()};
}

}  // namespace

ComplexApprox gamma(const Complex& s) {
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at " + to_string(s.re, 10));
  const LogGamma lg = stirling(s);
  const Complex v = exp(lg.log_value) / lg.shift;
  // |exp(d) - 1| <= 1.01 |d| for small d, plus the relative error of the shift product.
  const double rel = 1.01 * lg.log_err + 1.01 * lg.shift_rel + 8 * unit_roundoff();
  return ComplexApprox(v, round_up(upper(v) * rel));
}

ComplexApprox rgamma(const Complex& s) {
  if (is_nonpositive_integer(s)) return ComplexApprox(Complex(), 0.0);
  const LogGamma lg = stirling(s);
  const Complex v = exp(-lg.log_value) * lg.shift;
  const double rel = 1.01 * lg.log_err + 1.01 * lg.shift_rel + 8 * unit_roundoff();
  return ComplexApprox(v, round_up(upper(v) * rel));
}

}  // namespace lerchz

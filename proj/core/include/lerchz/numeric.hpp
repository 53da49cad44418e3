#pragma once

// Multiprecision scalar layer: real and complex numbers at a runtime-selected
// working precision, exact rationals, and values carrying an absolute error
// bound.

#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace lerchz {

using Real = boost::multiprecision::mpfr_float;
using Rational = boost::rational<std::int64_t>;

// Sets the process-wide working precision for newly created Real values and
// restores the previous one on destruction. Only one precision may be active
// at a time; worker threads inherit the precision of the scope that spawned
// them.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits10);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned saved_;
};

unsigned working_digits();
unsigned working_bits();
// Unit roundoff 2^(1-bits) of the current working precision.
double unit_roundoff();

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(double r, double i) : re(r), im(i) {}

  bool is_real() const { return im == 0; }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
bool operator==(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
// exp(i*theta)
Complex expi(const Real& theta);
// base^exponent for a positive real base.
Complex pow(const Real& base, const Complex& exponent);
Complex pow(const Complex& base, const Complex& exponent);
Complex pow(const Complex& base, unsigned n);

Real pi();
Real two_pi();

// Fractional part of an exact rational, in [0, 1).
Rational frac(const Rational& r);
bool is_integer(const Rational& r);
Real to_real(const Rational& r);
// e(r) = exp(2 pi i r) evaluated from the exact angle; r is reduced mod 1
// first so that no drift accumulates.
Complex unit_root(const Rational& r);

Rational parse_rational(const std::string& text);
Complex parse_complex(const std::string& text);
std::string to_string(const Rational& r);
std::string to_string(const Real& x, int digits = 0);
std::string to_string(const Complex& z, int digits = 0);
Real parse_real(const std::string& text);

// Upper bound, as a double, of |x| (or |z|). Slightly inflated so that the
// conversion never rounds a bound down.
double upper(const Real& x);
double upper(const Complex& z);
double to_double(const Real& x);

// Rounds a nonnegative double bound upward by a couple of ulps.
double round_up(double x);

// A complex value together with an absolute error bound on it. The
// arithmetic below propagates bounds conservatively, including a rounding
// allowance for the operation itself.
struct ComplexApprox {
  Complex value;
  double err = 0.0;

  ComplexApprox() = default;
  ComplexApprox(Complex v, double e) : value(std::move(v)), err(e) {}
  explicit ComplexApprox(const Real& v) : value(v), err(0.0) {}

  double magnitude_upper() const { return upper(value) + err; }
  bool contains_zero() const { return upper(value) <= err; }

  ComplexApprox& operator+=(const ComplexApprox& o);
  ComplexApprox& operator-=(const ComplexApprox& o);
  ComplexApprox& operator*=(const ComplexApprox& o);
};

ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b);
ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b);
ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b);
// Multiplication by a value that is exact up to rounding.
ComplexApprox operator*(const ComplexApprox& a, const Complex& b);
ComplexApprox operator*(const Complex& a, const ComplexApprox& b);
ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b);
ComplexApprox conj(const ComplexApprox& z);
ComplexApprox pow(const ComplexApprox& z, unsigned n);
// |z|^2 as a real-valued approximation.
ComplexApprox norm(const ComplexApprox& z);

// v * n^exponent, with the rounding of the power folded into the bound.
ComplexApprox scale_by_power(const ComplexApprox& v, std::int64_t n, const Complex& exponent);
// v * x^exponent for a positive rational x.
ComplexApprox scale_by_power(const ComplexApprox& v, const Rational& x, const Complex& exponent);

// |a - b| together with the sum of the two bounds; the usual agreement test.
struct Agreement {
  double difference = 0.0;
  double bound = 0.0;
  bool ok() const { return difference <= bound; }
};
Agreement compare(const ComplexApprox& a, const ComplexApprox& b);

}  // namespace lerchz

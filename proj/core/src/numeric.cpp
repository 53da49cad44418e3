#include "lerchz/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lerchz/errors.hpp"

namespace lerchz {

namespace {

// Same conversion the mpfr backend uses when allocating a new value.
unsigned bits_for_digits(unsigned digits10) {
  return static_cast<unsigned>(boost::multiprecision::detail::digits10_2_2(digits10));
}

constexpr double kDoubleSlack = 1.0 + 4.0 * std::numeric_limits<double>::epsilon();

}  // namespace

WorkingPrecision::WorkingPrecision(unsigned digits10)
    : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(saved_); }

unsigned working_digits() { return Real::default_precision(); }

unsigned working_bits() { return bits_for_digits(working_digits()); }

double unit_roundoff() { return std::ldexp(1.0, 1 - static_cast<int>(working_bits())); }

double round_up(double x) {
  if (x == 0.0) return 0.0;
  return x * kDoubleSlack + std::numeric_limits<double>::denorm_min();
}

double to_double(const Real& x) { return x.convert_to<double>(); }

double upper(const Real& x) { return round_up(std::fabs(to_double(x))); }

double upper(const Complex& z) {
  if (z.im == 0) return upper(z.re);
  if (z.re == 0) return upper(z.im);
  const double a = std::fabs(to_double(z.re));
  const double b = std::fabs(to_double(z.im));
  return round_up(std::hypot(a, b));
}

// ---------------------------------------------------------------------------
// Complex

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (o.im == 0) return *this *= o.re;
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  im *= o;
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

Complex operator*(const Complex& a, const Complex& b) {
  Complex r = a;
  r *= b;
  return r;
}

Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im == 0) return a / b.re;
  const Real d = b.re * b.re + b.im * b.im;
  return Complex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }

bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
  if (z.im == 0) return boost::multiprecision::abs(z.re);
  return boost::multiprecision::sqrt(norm(z));
}

Complex expi(const Real& theta) {
  Real s, c;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), theta.backend().data(), MPFR_RNDN);
  return Complex(c, s);
}

Complex exp(const Complex& z) {
  const Real m = boost::multiprecision::exp(z.re);
  if (z.im == 0) return Complex(m);
  return expi(z.im) * m;
}

Complex log(const Complex& z) {
  if (z.im == 0 && z.re > 0) return Complex(boost::multiprecision::log(z.re));
  return Complex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re));
}

Complex sqrt(const Complex& z) {
  if (z.im == 0 && z.re >= 0) return Complex(boost::multiprecision::sqrt(z.re));
  return exp(log(z) * Real(0.5));
}

Complex pow(const Real& base, const Complex& exponent) {
  if (exponent.im == 0) {
    if (exponent.re == -0.5) return Complex(1 / boost::multiprecision::sqrt(base));
    if (exponent.re == 0.5) return Complex(boost::multiprecision::sqrt(base));
    return Complex(boost::multiprecision::pow(base, exponent.re));
  }
  const Real lb = boost::multiprecision::log(base);
  return expi(exponent.im * lb) * boost::multiprecision::exp(exponent.re * lb);
}

Complex pow(const Complex& base, const Complex& exponent) {
  if (base.im == 0 && base.re > 0) return pow(base.re, exponent);
  return exp(log(base) * exponent);
}

Complex pow(const Complex& base, unsigned n) {
  Complex result(Real(1));
  Complex b = base;
  while (n) {
    if (n & 1U) result *= b;
    n >>= 1U;
    if (n) b *= b;
  }
  return result;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real two_pi() { return 2 * pi(); }

// ---------------------------------------------------------------------------
// Rationals

Rational frac(const Rational& r) {
  std::int64_t n = r.numerator() % r.denominator();
  if (n < 0) n += r.denominator();
  return Rational(n, r.denominator());
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

Real to_real(const Rational& r) { return Real(r.numerator()) / Real(r.denominator()); }

Complex unit_root(const Rational& r) {
  const Rational f = frac(r);
  const std::int64_t n = f.numerator();
  const std::int64_t d = f.denominator();
  if (n == 0) return Complex(Real(1));
  if (2 * n == d) return Complex(Real(-1));
  if (4 * n == d) return Complex(Real(0), Real(1));
  if (4 * n == 3 * d) return Complex(Real(0), Real(-1));
  // Fold into [-1/2, 1/2) before scaling by 2 pi.
  const Real angle = two_pi() * (2 * n < d ? Real(n) / d : Real(n - d) / d);
  return expi(angle);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      // Decimal input such as "0.25" is accepted when it is exactly a
      // terminating decimal.
      const auto dot = text.find('.');
      if (dot == std::string::npos) {
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw ParseError("invalid rational '" + text + "'");
        return Rational(v);
      }
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const std::size_t decimals = text.size() - dot - 1;
      if (decimals > 17) throw ParseError("too many decimals in '" + text + "'");
      const long long v = std::stoll(digits, &used);
      if (used != digits.size()) throw ParseError("invalid rational '" + text + "'");
      std::int64_t den = 1;
      for (std::size_t i = 0; i < decimals; ++i) den *= 10;
      return Rational(v, den);
    }
    const long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw ParseError("invalid rational '" + text + "'");
    const std::string dtext = text.substr(slash + 1);
    const long long d = std::stoll(dtext, &used);
    if (used != dtext.size()) throw ParseError("invalid rational '" + text + "'");
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range '" + text + "'");
  }
}

Real parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_real(parse_rational(text));
  Real r;
  try {
    r = Real(text);
  } catch (const std::exception&) {
    throw ParseError("invalid real '" + text + "'");
  }
  return r;
}

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text.push_back(ch);
  if (text.empty()) throw ParseError("empty complex number");
  if (text.back() != 'i') return Complex(parse_real(text));
  std::string body = text.substr(0, text.size() - 1);
  // Find the sign separating real and imaginary parts, skipping exponent
  // signs such as "1e-3".
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  Real re(0);
  std::string imtext = body;
  if (split != std::string::npos) {
    re = parse_real(body.substr(0, split));
    imtext = body.substr(split);
  }
  if (imtext.empty() || imtext == "+") return Complex(re, Real(1));
  if (imtext == "-") return Complex(re, Real(-1));
  if (imtext[0] == '+') imtext.erase(0, 1);
  return Complex(re, parse_real(imtext));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Real& x, int digits) {
  if (digits <= 0) {
    // Enough digits to round-trip the binary value exactly.
    digits = static_cast<int>(std::ceil(mpfr_get_prec(x.backend().data()) * 0.30102999566398120)) + 2;
  }
  return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits) {
  std::string out = to_string(z.re, digits);
  const bool neg = z.im < 0;
  out += neg ? " - " : " + ";
  out += to_string(neg ? Real(-z.im) : z.im, digits);
  out += "i";
  return out;
}

// ---------------------------------------------------------------------------
// ComplexApprox

namespace {

double rounding(const Complex& v, double ops) { return round_up(upper(v) * unit_roundoff() * ops); }

}  // namespace

ComplexApprox& ComplexApprox::operator+=(const ComplexApprox& o) {
  value += o.value;
  err = round_up(err + o.err + rounding(value, 1));
  return *this;
}

ComplexApprox& ComplexApprox::operator-=(const ComplexApprox& o) {
  value -= o.value;
  err = round_up(err + o.err + rounding(value, 1));
  return *this;
}

ComplexApprox& ComplexApprox::operator*=(const ComplexApprox& o) {
  *this = *this * o;
  return *this;
}

ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }

ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
  const double ma = upper(a.value);
  const double mb = upper(b.value);
  Complex v = a.value * b.value;
  const double e = ma * b.err + mb * a.err + a.err * b.err + rounding(v, 4);
  return ComplexApprox(std::move(v), round_up(e));
}

ComplexApprox operator*(const ComplexApprox& a, const Complex& b) {
  Complex v = a.value * b;
  const double e = upper(b) * a.err * (1 + 4 * unit_roundoff()) + rounding(v, 4);
  return ComplexApprox(std::move(v), round_up(e));
}

ComplexApprox operator*(const Complex& a, const ComplexApprox& b) { return b * a; }

ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
  const double mb = std::fabs(to_double(abs(b.value)));
  if (!(mb > b.err)) throw NumericError("division by an approximation containing zero");
  Complex v = a.value / b.value;
  // |a/b - A/B| <= (|a - A| + |A/B| |b - B|) / (|B| - |b - B|)
  const double e = (a.err + upper(v) * b.err) / ((mb - b.err) * (1 - 1e-15)) + rounding(v, 8);
  return ComplexApprox(std::move(v), round_up(e));
}

ComplexApprox conj(const ComplexApprox& z) { return ComplexApprox(conj(z.value), z.err); }

ComplexApprox pow(const ComplexApprox& z, unsigned n) {
  ComplexApprox result(Complex(Real(1)), 0.0);
  for (unsigned k = 0; k < n; ++k) result = result * z;
  return result;
}

ComplexApprox norm(const ComplexApprox& z) {
  const double m = upper(z.value);
  Complex v(norm(z.value));
  return ComplexApprox(v, round_up(2 * m * z.err + z.err * z.err + rounding(v, 3)));
}

Agreement compare(const ComplexApprox& a, const ComplexApprox& b) {
  Agreement out;
  const Complex d = a.value - b.value;
  out.difference = std::fabs(to_double(abs(d)));
  out.bound = round_up(a.err + b.err + rounding(a.value, 2) + rounding(b.value, 2));
  return out;
}

ComplexApprox scale_by_power(const ComplexApprox& v, const Rational& x, const Complex& exponent) {
  if (x == Rational(1)) return v;
  const Complex f = pow(to_real(x), exponent);
  const double e = std::hypot(to_double(exponent.re), to_double(exponent.im));
  const double lx = std::abs(std::log(static_cast<double>(x.numerator()) / static_cast<double>(x.denominator())));
  ComplexApprox out = v * f;
  out.err = round_up(out.err + upper(out.value) * (8 + 2 * e * (lx + 1)) * unit_roundoff());
  return out;
}

ComplexApprox scale_by_power(const ComplexApprox& v, std::int64_t n, const Complex& exponent) {
  return scale_by_power(v, Rational(n), exponent);
}

}  // namespace lerchz

#include "lerchz/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "lerchz/bernoulli.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/gamma.hpp"
#include "lerchz/hurwitz_cache.hpp"
#include "lerchz/quadrature.hpp"

namespace lerchz {

namespace {

using boost::multiprecision::exp;
using boost::multiprecision::log;

bool is_one(const Complex& s) { return s.re == 1 && s.im == 0; }

double sigma_of(const Complex& s) { return to_double(s.re); }

double abs_of(const Complex& s) { return std::hypot(to_double(s.re), to_double(s.im)); }

double distance_to_integers(const Rational& alpha) {
  const double a = static_cast<double>(alpha.numerator()) / static_cast<double>(alpha.denominator());
  return std::min(a - std::floor(a), std::ceil(a) - a);
}

// x^(-s) for positive real x, specialised for the common real exponents.
class NegPower {
 public:
  explicit NegPower(const Complex& s) : s_(s), real_(s.im == 0) {
    if (real_) {
      if (s.re == 0.5) kind_ = Kind::InvSqrt;
      else if (s.re == 1.5) kind_ = Kind::InvSqrtCubed;
      else if (s.re == 1) kind_ = Kind::Inverse;
      else if (s.re == 2) kind_ = Kind::InverseSquare;
      else kind_ = Kind::RealPow;
      neg_sigma_ = -s.re;
    } else {
      kind_ = Kind::Complex;
      neg_sigma_ = -s.re;
      neg_tau_ = -s.im;
    }
  }

  Complex operator()(const Real& x) const {
    switch (kind_) {
      case Kind::InvSqrt: {
        Real r;
        mpfr_rec_sqrt(r.backend().data(), x.backend().data(), MPFR_RNDN);
        return Complex(r);
      }
      case Kind::InvSqrtCubed: {
        Real r;
        mpfr_rec_sqrt(r.backend().data(), x.backend().data(), MPFR_RNDN);
        return Complex(Real(r / x));
      }
      case Kind::Inverse:
        return Complex(Real(1 / x));
      case Kind::InverseSquare:
        return Complex(Real(1 / (x * x)));
      case Kind::RealPow:
        return Complex(Real(boost::multiprecision::pow(x, neg_sigma_)));
      case Kind::Complex: {
        const Real lx = log(x);
        const Real m = exp(neg_sigma_ * lx);
        Complex w = expi(neg_tau_ * lx);
        w *= m;
        return w;
      }
    }
    return Complex();
  }

 private:
  enum class Kind { InvSqrt, InvSqrtCubed, Inverse, InverseSquare, RealPow, Complex };
  Complex s_;
  bool real_;
  Kind kind_;
  Real neg_sigma_;
  Real neg_tau_;
};

struct EmPlan {
  long L = 0;
  unsigned K = 0;
  double cost = std::numeric_limits<double>::infinity();
};

// log of the Euler-Maclaurin remainder bound summed over r residue classes
// whose smallest abscissa is X0.
double em_log_bound(const Complex& s, double r, double X0, unsigned K) {
  const double sigma = sigma_of(s);
  double lp = 0;
  const double sr = to_double(s.re), si = to_double(s.im);
  for (unsigned j = 0; j < K; ++j) lp += std::log(std::hypot(sr + j, si));
  return (1 - sigma) * std::log(r) + std::log(periodic_bernoulli_sup(K)) + lp - std::log(sigma + K - 1) +
         (1 - sigma - K) * std::log(X0);
}

// Cheapest (L, K) meeting the target, with cost measured in evaluations of
// x^(-s) (Bernoulli terms are cheaper and weighted accordingly).
EmPlan plan_em(const Complex& s, double r, double c_over_r, double target, const PrecisionConfig& cfg) {
  const double sigma = sigma_of(s);
  const double sr = to_double(s.re), si = to_double(s.im);
  const long max_L = static_cast<long>(static_cast<double>(cfg.max_series_terms) / r);
  const double log_target = std::log(target);
  EmPlan best;
  double lp = 0;  // log |(s)_K|
  for (unsigned K = 1; K <= cfg.max_em_order; ++K) {
    lp += std::log(std::hypot(sr + K - 1, si));
    if (K % 2 == 1 && K > 1) continue;
    const double e = sigma + K - 1;
    if (e < 0.25) continue;
    const double A = (1 - sigma) * std::log(r) + std::log(periodic_bernoulli_sup(K)) + lp - std::log(e) - log_target;
    const double logX = std::max(A / e, 0.0);
    if (logX > std::log(static_cast<double>(max_L) + 2)) continue;
    const double X = std::exp(logX);
    const long L = std::max(1L, static_cast<long>(std::ceil(X - c_over_r)));
    if (L > max_L) continue;
    const double cost = r * (static_cast<double>(L) + 0.4 * K);
    if (cost < best.cost) best = {L, K, cost};
  }
  if (best.K == 0) throw ConvergenceError("Euler-Maclaurin truncation cannot reach the target within the caps");
  return best;
}

// -sum_{n>=1} w^(n-1) (log X)^n / n!, i.e. X^(1-s)/(s-1) - 1/(s-1) for w = 1 - s.
Complex integral_series(const Complex& w, const Real& logX, double& truncation) {
  Complex sum;
  Complex term(logX);  // w^(n-1) logX^n / n! at n = 1
  const double wl = abs_of(w) * to_double(logX);
  const double stop = std::pow(10.0, -static_cast<double>(working_digits())) * 1e-3;
  for (unsigned n = 1; n < 10000; ++n) {
    sum -= term;
    term *= w * logX / Real(n + 1);
    const double t = upper(term);
    if (t < stop) {
      truncation = round_up(t / (1 - std::min(wl, 0.9)) * 2);
      return sum;
    }
  }
  throw ConvergenceError("logarithmic series did not converge");
}

// sum_{n < L r} e(n alpha) (n + c)^(-s) + r^(-s) sum_j e(j alpha) Tail(L + (j + c)/r)
// where alpha = p / r and Tail is the Euler-Maclaurin expansion of the
// residue class tail. With regular = true (only meaningful for r = 1) the
// pole part 1/(s-1) is removed.
ComplexApprox em_evaluate(const Rational& alpha, const Rational& c, const Complex& s, long L, unsigned K,
                          bool regular) {
  const std::int64_t r = alpha.denominator();
  const double rd = static_cast<double>(r);
  const double sigma = sigma_of(s);
  const Real cr = to_real(c);
  const double cd = to_double(cr);
  const NegPower neg_power(s);

  std::vector<Complex> roots;
  if (r > 1) {
    roots.reserve(static_cast<std::size_t>(r));
    for (std::int64_t j = 0; j < r; ++j) roots.push_back(unit_root(alpha * j));
  }

  // Direct part.
  Complex direct;
  double magnitude = 0;
  const long N = L * static_cast<long>(r);
  for (long n = 0; n < N; ++n) {
    const Real x = cr + n;
    Complex term = neg_power(x);
    if (r > 1) term *= roots[static_cast<std::size_t>(n % r)];
    direct += term;
    magnitude += std::pow(n + cd, -sigma);
  }

  // Bernoulli coefficients gamma_k = B_k/k! (s)_{k-1}, even k.
  const auto bern = bernoulli_scaled(K);
  std::vector<Complex> gam;  // gamma_2, gamma_4, ...
  {
    Complex poch(Real(1));  // (s)_{k-1}
    for (unsigned k = 2; k <= K; ++k) {
      poch *= s + Complex(Real(k - 2));
      if (k % 2 == 0) gam.push_back(poch * (*bern)[k]);
    }
  }

  const Complex w = Complex(Real(1)) - s;
  const Complex inv_sm1 = is_one(s) ? Complex() : Complex(Real(1)) / (s - Complex(Real(1)));
  const double Xmax = static_cast<double>(L) + (rd - 1 + cd) / rd;
  const bool pole_free = r > 1 || regular;
  const bool use_series = pole_free && abs_of(w) * std::log(std::max(Xmax, 2.0)) < 0.5;
  if (is_one(s) && !pole_free) throw PoleError("pole at s=1");

  Complex tail;
  double tail_magnitude = 0;
  double series_truncation = 0;
  for (std::int64_t j = 0; j < r; ++j) {
    const Real X = Real(L) + (cr + j) / r;
    const Real Y = 1 / X;
    const Real Y2 = Y * Y;
    const Complex Xs = neg_power(X);
    // 1/2 + sum_m gamma_{2m} Y^(2m-1), Horner in Y^2.
    Complex h;
    for (std::size_t m = gam.size(); m-- > 0;) {
      h *= Y2;
      h += gam[m];
    }
    h *= Y;
    h += Complex(Real(0.5));
    Complex t = Xs * h;
    const double Xd = to_double(X);
    const double xs_abs = std::pow(Xd, -sigma);
    if (use_series) {
      double trunc = 0;
      t += integral_series(w, log(X), trunc);
      series_truncation += trunc;
      tail_magnitude += xs_abs * (upper(h) + 1) + std::log(Xd + 2) * (1 + abs_of(w));
    } else {
      t += Xs * X * inv_sm1;
      tail_magnitude += xs_abs * (upper(h) + Xd * to_double(abs(inv_sm1)));
    }
    if (r > 1) t *= roots[static_cast<std::size_t>(j)];
    tail += t;
  }
  if (r == 1 && regular && !use_series) tail -= inv_sm1;
  if (r == 1 && regular && !use_series) tail_magnitude += to_double(abs(inv_sm1));

  Complex value = direct;
  if (r > 1) {
    value += pow(Real(r), -s) * tail;
  } else {
    value += tail;
  }
  const double scale = std::pow(rd, -sigma);
  const double X0 = static_cast<double>(L) + cd / rd;
  const double remainder = std::exp(em_log_bound(s, rd, X0, K));
  const double ops = 32.0 + K + 2 * abs_of(s) * std::log(std::max(Xmax, 2.0));
  const double rounding = (magnitude + scale * tail_magnitude) * ops * unit_roundoff();
  const double err = remainder + rounding + scale * series_truncation;
  return ComplexApprox(std::move(value), round_up(err));
}

// Plain partial sum of the Dirichlet series with the integral tail bound;
// requires Re s > 1. Returns false if the term count exceeds the cap.
bool direct_truncation_terms(double sigma, double cd, double target, std::size_t cap, long& N) {
  if (sigma <= 1) return false;
  // (N - 1 + c)^(1 - sigma) / (sigma - 1) <= target
  const double logX = std::log(target * (sigma - 1)) / (1 - sigma);
  if (logX > std::log(static_cast<double>(cap))) return false;
  N = std::max(1L, static_cast<long>(std::ceil(std::exp(logX) + 1 - cd)));
  return N <= static_cast<long>(cap);
}

ComplexApprox direct_sum(const Rational& alpha, const Rational& c, const Complex& s, long N) {
  const std::int64_t r = alpha.denominator();
  const double sigma = sigma_of(s);
  const Real cr = to_real(c);
  const double cd = to_double(cr);
  const NegPower neg_power(s);
  std::vector<Complex> roots;
  const bool table = r > 1 && r <= N;
  if (table)
    for (std::int64_t j = 0; j < r; ++j) roots.push_back(unit_root(alpha * j));
  Complex sum;
  double magnitude = 0;
  for (long n = 0; n < N; ++n) {
    Complex term = neg_power(cr + n);
    if (r > 1) term *= table ? roots[static_cast<std::size_t>(n % r)] : unit_root(alpha * n);
    sum += term;
    magnitude += std::pow(n + cd, -sigma);
  }
  const double tail = std::pow(N - 1 + cd, 1 - sigma) / (sigma - 1);
  const double ops = 32.0 + 2 * abs_of(s) * std::log(N + 2.0);
  return ComplexApprox(std::move(sum), round_up(tail + magnitude * ops * unit_roundoff()));
}

ComplexApprox block_series(const Rational& alpha, const Rational& c, const Complex& s, bool allow_direct) {
  const PrecisionConfig& cfg = current_config();
  const double target = cfg.target();
  const double rd = static_cast<double>(alpha.denominator());
  const double cd = static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
  EmPlan plan;
  try {
    plan = plan_em(s, rd, cd / rd, target, cfg);
  } catch (const ConvergenceError&) {
    if (!allow_direct) throw;
  }
  long N = 0;
  if (allow_direct && direct_truncation_terms(sigma_of(s), cd, target / 2, cfg.max_series_terms, N) &&
      static_cast<double>(N) < plan.cost) {
    return direct_sum(alpha, c, s, N);
  }
  if (plan.K == 0) throw ConvergenceError("series truncation cannot reach the target within the caps");
  return em_evaluate(alpha, c, s, plan.L, plan.K, false);
}

void require_positive_c(const Rational& c) {
  if (c <= 0) throw DomainError("c must be positive");
}

ComplexApprox periodic_value(const Rational& alpha, const Complex& s) {
  if (alpha.numerator() == 0) return hurwitz_em(Rational(1), s);
  return block_series(alpha, Rational(1), s, sigma_of(s) > 1);
}

}  // namespace

// ---------------------------------------------------------------------------

LerchArgument::LerchArgument(const Rational& a, const Rational& c_, Complex s_)
    : alpha(frac(a)), c(c_), s(std::move(s_)) {
  require_positive_c(c);
}

std::string LerchArgument::describe() const {
  std::ostringstream out;
  out << "(alpha=" << to_string(alpha) << ", c=" << to_string(c) << ", s=" << to_string(s, 12) << ")";
  return out.str();
}

std::string route_name(Route route) {
  switch (route) {
    case Route::Series: return "series";
    case Route::Hurwitz: return "hurwitz-em";
    case Route::Taylor: return "taylor";
    case Route::Integral: return "integral";
    case Route::Continuation: return "continuation";
  }
  return "unknown";
}

ComplexApprox lerch_series(const LerchArgument& arg) {
  const PrecisionConfig& cfg = current_config();
  const double sigma = sigma_of(arg.s);
  if (arg.alpha_integral()) {
    if (sigma <= 1 + cfg.delta) throw DomainError("Dirichlet series diverges for integral alpha and Re s <= 1 + delta");
  } else if (sigma <= 0) {
    throw DomainError("Dirichlet series requires Re s > 0");
  }
  return block_series(arg.alpha, arg.c, arg.s, sigma > 1 + cfg.delta);
}

ComplexApprox hurwitz_em(const Rational& c, const Complex& s, int L, int K) {
  require_positive_c(c);
  if (is_one(s)) throw PoleError("pole at s=1");
  const PrecisionConfig& cfg = current_config();
  const double sigma = sigma_of(s);
  if (L == kAdaptive || K == kAdaptive) {
    const double cd = static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
    const EmPlan plan = plan_em(s, 1.0, cd, cfg.target(), cfg);
    return em_evaluate(Rational(0), c, s, plan.L, plan.K, false);
  }
  if (L < 0 || K < 1) throw DomainError("hurwitz_em needs L >= 0 and K >= 1");
  if (sigma + K <= 1 + cfg.delta) throw DomainError("hurwitz_em needs Re s + K > 1 + delta");
  return em_evaluate(Rational(0), c, s, L, static_cast<unsigned>(K), false);
}

ComplexApprox hurwitz_regular(const Rational& c, const Complex& s) {
  require_positive_c(c);
  const PrecisionConfig& cfg = current_config();
  const double cd = static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
  const EmPlan plan = plan_em(s, 1.0, cd, cfg.target(), cfg);
  return em_evaluate(Rational(0), c, s, plan.L, plan.K, true);
}

ComplexApprox lerch_continuation(const LerchArgument& arg) {
  if (arg.alpha_integral()) throw DomainError("continuation route needs non-integral alpha");
  return block_series(arg.alpha, arg.c, arg.s, false);
}

ComplexApprox lerch_taylor_regular(const Rational& alpha_in, const Rational& c, const Complex& s) {
  const Rational alpha = frac(alpha_in);
  if (c < 0 || c >= 1) throw DomainError("Taylor route needs 0 <= c < 1");
  const double sigma = sigma_of(s);
  if (sigma <= 0) throw DomainError("Taylor route needs Re s > 0");
  if (alpha.numerator() == 0 && is_one(s)) throw PoleError("pole at s=1");
  const PrecisionConfig& cfg = current_config();
  const double target = cfg.target();
  const double cd = static_cast<double>(c.numerator()) / static_cast<double>(c.denominator());
  const double s_abs = abs_of(s);
  const Real cr = to_real(c);

  ComplexApprox sum(Complex(), 0.0);
  Complex coef(Real(1));  // (s)_n / n! (-c)^n
  const unsigned cap = 100000;
  for (unsigned n = 0;; ++n) {
    if (n > cap) throw ConvergenceError("Taylor expansion needs too many terms");
    const Complex sn = s + Complex(Real(n));
    sum += coef * periodic_value(alpha, sn);
    coef *= sn * (-cr) / Real(n + 1);
    if (sigma + n + 1 >= 2) {
      const double rho = cd * std::max(1.0, (s_abs + n + 1) / (n + 2));
      if (rho < 1) {
        const double tail = 2 * std::max(upper(coef), 1e-300) / (1 - rho);
        if (cd == 0 || tail < target / 2) {
          sum.err = round_up(sum.err + (cd == 0 ? 0.0 : tail));
          break;
        }
      }
    }
  }
  return unit_root(alpha) * sum;
}

ComplexApprox lerch_taylor(const LerchArgument& arg) {
  if (arg.c >= 1) throw DomainError("Taylor route needs 0 < c < 1");
  ComplexApprox reg = lerch_taylor_regular(arg.alpha, arg.c, arg.s);
  const Complex cs = pow(to_real(arg.c), -arg.s);
  ComplexApprox lead(cs, round_up(upper(cs) * (8 + abs_of(arg.s) * 4) * unit_roundoff()));
  return lead + reg;
}

ComplexApprox lerch_integral(const LerchArgument& arg) {
  const double sigma = sigma_of(arg.s);
  if (sigma <= 0) throw DomainError("integral route needs Re s > 0");
  if (distance_to_integers(arg.alpha) < 1e-3) throw DomainError("integral route needs alpha at distance >= 1e-3 from the integers");
  const PrecisionConfig& cfg = current_config();
  const Complex ea = unit_root(arg.alpha);
  const Real cr = to_real(arg.c);
  const double cd = to_double(cr);
  const Complex one(Real(1));
  const Complex two_s_minus_1 = Complex(Real(2)) * arg.s - one;
  const Complex s_minus_1 = arg.s - one;

  // Truncation point T for the tail bound
  //   T^(sigma-1) e^(-cT) / (c - max(0, sigma-1)/T) / (1 - e^(-T)).
  auto tail_bound = [&](double T) {
    const double denom = cd - std::max(0.0, sigma - 1) / T;
    if (denom <= 0) return std::numeric_limits<double>::infinity();
    return std::exp((sigma - 1) * std::log(T) - cd * T) / denom / (1 - std::exp(-T));
  };
  const double target = cfg.target();
  double T = 2;
  while (tail_bound(T) > target / 4) T *= 1.25;

  std::vector<std::pair<Real, Real>> pieces;
  for (double a = 1; a < T; a *= 2) pieces.emplace_back(Real(a), Real(std::min(2 * a, T)));
  QuadratureOptions opts;
  opts.target = target / (4.0 * (static_cast<double>(pieces.size()) + 1));
  opts.max_level = cfg.max_quadrature_level;

  auto near = [&](const Real& u) -> Complex {
    if (u == 0) return Complex();
    const Real u2 = u * u;
    Complex num = pow(u, two_s_minus_1);
    num *= 2 * exp(-cr * u2);
    const Complex den = one - ea * Real(exp(-u2));
    return num / den;
  };
  auto far = [&](const Real& t) -> Complex {
    Complex num = pow(t, s_minus_1);
    num *= exp(-cr * t);
    const Complex den = one - ea * Real(exp(-t));
    return num / den;
  };

  ComplexApprox total = tanh_sinh(near, Real(0), Real(1), opts).value;
  for (const auto& [a, b] : pieces) total += tanh_sinh(far, a, b, opts).value;
  total.err = round_up(total.err + tail_bound(T));
  return rgamma(arg.s) * total;
}

std::vector<Route> applicable_routes(const LerchArgument& arg) {
  const PrecisionConfig& cfg = current_config();
  const double sigma = sigma_of(arg.s);
  const bool pole = is_one(arg.s);
  const bool c_small = arg.c < 1;
  std::vector<Route> out;
  if (arg.alpha_integral()) {
    if (pole) return out;
    out.push_back(Route::Hurwitz);
    if (sigma > 1 + cfg.delta) out.push_back(Route::Series);
    if (sigma > 0 && c_small) out.push_back(Route::Taylor);
    return out;
  }
  if (sigma > 0) {
    out.push_back(Route::Series);
    if (distance_to_integers(arg.alpha) >= 1e-3) out.push_back(Route::Integral);
    if (c_small) out.push_back(Route::Taylor);
  } else {
    out.push_back(Route::Continuation);
  }
  return out;
}

ComplexApprox lerch_route(const LerchArgument& arg, Route route) {
  switch (route) {
    case Route::Series: return lerch_series(arg);
    case Route::Hurwitz:
      if (!arg.alpha_integral()) throw DomainError("Hurwitz route needs integral alpha");
      return hurwitz_em(arg.c, arg.s);
    case Route::Taylor: return lerch_taylor(arg);
    case Route::Integral: return lerch_integral(arg);
    case Route::Continuation: return lerch_continuation(arg);
  }
  throw DomainError("unknown route");
}

RoutedValue lerch_eval_routed(const LerchArgument& arg, bool dual) {
  if (arg.alpha_integral() && is_one(arg.s)) throw PoleError("pole at s=1");
  auto routes = applicable_routes(arg);
  if (routes.empty()) throw DomainError("no route available for " + arg.describe());
  // Preferred order: the Euler-Maclaurin based routes for moderate
  // denominators, then the integral. Every Taylor coefficient costs a full
  // periodic sum over the denominator, so the expansion ranks last.
  auto rank = [&](Route r) {
    const bool small_den = arg.alpha.denominator() <= 4096;
    switch (r) {
      case Route::Hurwitz: return 0;
      case Route::Continuation: return 0;
      case Route::Series: return small_den ? 1 : 4;
      case Route::Integral: return 2;
      case Route::Taylor: return 5;
    }
    return 9;
  };
  std::stable_sort(routes.begin(), routes.end(), [&](Route a, Route b) { return rank(a) < rank(b); });

  std::optional<RoutedValue> first;
  std::size_t next = 0;
  for (; next < routes.size(); ++next) {
    try {
      first = RoutedValue{lerch_route(arg, routes[next]), routes[next]};
      ++next;
      break;
    } catch (const ConvergenceError&) {
      if (next + 1 == routes.size()) throw;
    }
  }
  if (!dual) return *first;
  for (; next < routes.size(); ++next) {
    if (routes[next] == Route::Series && first->route == Route::Hurwitz) continue;
    try {
      RoutedValue second{lerch_route(arg, routes[next]), routes[next]};
      const Agreement a = compare(first->value, second.value);
      if (!a.ok())
        throw InternalError("routes " + route_name(first->route) + " and " + route_name(second.route) +
                            " disagree at " + arg.describe());
      return second.value.err < first->value.err ? second : *first;
    } catch (const ConvergenceError&) {
    }
  }
  return *first;
}

ComplexApprox lerch_eval(const LerchArgument& arg, bool dual) { return lerch_eval_routed(arg, dual).value; }

FunctionalEquationCheck functional_equation_check(const LerchArgument& arg) {
  const Rational& alpha = arg.alpha;
  const Rational& c = arg.c;
  if (alpha <= 0 || alpha >= 1 || c <= 0 || c >= 1)
    throw DomainError("functional equation check needs 0 < alpha, c < 1");
  const Complex one(Real(1));
  const Complex& s = arg.s;
  FunctionalEquationCheck out;
  out.lhs = lerch_eval(LerchArgument(alpha, c, one - s));

  const ComplexApprox z1 = lerch_eval(LerchArgument(Rational(1) - c, alpha, s));
  const ComplexApprox z2 = lerch_eval(LerchArgument(c, Rational(1) - alpha, s));
  // e(s/4) = exp(pi i s / 2)
  const Complex quarter = exp(Complex(Real(0), pi() / 2) * s);
  const Complex w1 = quarter * unit_root(-alpha * c);
  const Complex w2 = (one / quarter) * unit_root((Rational(1) - alpha) * c);
  const Complex two_pi_pow = pow(two_pi(), -s);
  const ComplexApprox g = gamma(s) * two_pi_pow;
  out.rhs = g * (z1 * w1 + z2 * w2);
  out.agreement = compare(out.lhs, out.rhs);
  return out;
}

std::vector<ComplexApprox> expinc2_profile(const Rational& alpha_in, unsigned N) {
  const Rational alpha = frac(alpha_in);
  if (alpha.numerator() == 0) throw DomainError("expansion coefficients need alpha not in Z");
  const Complex half(Real(0.5));
  const Complex ea = unit_root(alpha);
  std::vector<ComplexApprox> out;
  out.reserve(N + 1);
  {
    const ComplexApprox z = ea * periodic_value(alpha, half);
    const Real a = to_real(alpha);
    const Complex sing = Complex(Real(0.5), Real(0.5)) / boost::multiprecision::sqrt(a) +
                         Complex(Real(0.5), Real(-0.5)) / boost::multiprecision::sqrt(Real(1 - a));
    out.push_back(z - ComplexApprox(sing, round_up(upper(sing) * 16 * unit_roundoff())));
  }
  Real binom(1);  // binom(n - 1/2, n) = (1/2)_n / n!
  for (unsigned n = 1; n <= N; ++n) {
    binom *= (Real(n) - Real(0.5)) / n;
    Complex f = ea * binom;
    if (n % 2 == 1) f = -f;
    out.push_back(f * periodic_value(alpha, Complex(Real(n) + Real(0.5))));
  }
  return out;
}

ComplexApprox expinc2_c0_hurwitz(const Rational& alpha_in) {
  const Rational alpha = frac(alpha_in);
  if (alpha.numerator() == 0) throw DomainError("expansion coefficients need alpha not in Z");
  const Complex half(Real(0.5));
  auto g = [&](const Rational& x) {
    const Complex lead(Real(1 / boost::multiprecision::sqrt(to_real(x))));
    return hurwitz_em(x, half) - ComplexApprox(lead, round_up(upper(lead) * 8 * unit_roundoff()));
  };
  const Real inv_sqrt2 = 1 / boost::multiprecision::sqrt(Real(2));
  const ComplexApprox v = g(alpha) * (unit_root(Rational(1, 8)) * inv_sqrt2) +
                          g(Rational(1) - alpha) * (unit_root(Rational(-1, 8)) * inv_sqrt2);
  return v;
}

ComplexApprox expinc2_resum(const Rational& alpha_in, const Rational& c, const std::vector<ComplexApprox>& coefficients) {
  const Rational alpha = frac(alpha_in);
  if (c <= 0 || c >= 1) throw DomainError("resummation needs 0 < c < 1");
  const Real a = to_real(alpha);
  const Real cr = to_real(c);
  const double cd = to_double(cr);
  const Complex sing = Complex(Real(0.5), Real(0.5)) / boost::multiprecision::sqrt(a) +
                       Complex(Real(0.5), Real(-0.5)) / boost::multiprecision::sqrt(Real(1 - a)) +
                       Complex(Real(1 / boost::multiprecision::sqrt(cr)));
  ComplexApprox sum(sing, round_up(upper(sing) * 16 * unit_roundoff()));
  Real cn(1);
  for (const auto& coef : coefficients) {
    sum += coef * Complex(cn);
    cn *= cr;
  }
  // |C_n| <= binom(n - 1/2, n) zeta(n + 1/2) <= 2 for n >= 2.
  const double N = static_cast<double>(coefficients.size());
  if (N < 2) throw DomainError("resummation needs at least two coefficients");
  sum.err = round_up(sum.err + 2 * std::pow(cd, N) / (1 - cd));
  return sum;
}

std::vector<ComplexApprox> lerch_frequency_row(const Rational& c, const Complex& s, std::int64_t q,
                                               HurwitzCache* cache) {
  require_positive_c(c);
  if (q < 1) throw DomainError("frequency row needs q >= 1");
  const bool regular = is_one(s);
  std::optional<HurwitzCache> local;
  if (cache == nullptr || !(cache->s() == s) || cache->regular() != regular) {
    local.emplace(s, regular);
    cache = &*local;
  }
  std::vector<ComplexApprox> h;
  h.reserve(static_cast<std::size_t>(q));
  double err = 0, magnitude = 0;
  for (std::int64_t j = 0; j < q; ++j) {
    h.push_back(cache->get((Rational(j) + c) / q));
    err += h.back().err;
    magnitude += h.back().magnitude_upper();
  }
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(q));
  for (std::int64_t k = 0; k < q; ++k) roots.push_back(unit_root(Rational(k, q)));
  const Complex scale = pow(Real(q), -s);
  const double scale_abs = std::pow(static_cast<double>(q), -sigma_of(s));
  const double bound = round_up(scale_abs * (err + magnitude * (q + 16.0) * 4 * unit_roundoff()));

  std::vector<ComplexApprox> out;
  out.reserve(static_cast<std::size_t>(q));
  Real re, im, t;
  for (std::int64_t a = 0; a < q; ++a) {
    re = 0;
    im = 0;
    std::int64_t idx = 0;
    for (std::int64_t j = 0; j < q; ++j) {
      const Complex& w = roots[static_cast<std::size_t>(idx)];
      const Complex& v = h[static_cast<std::size_t>(j)].value;
      t = w.re * v.re;
      re += t;
      t = w.im * v.im;
      re -= t;
      t = w.re * v.im;
      im += t;
      t = w.im * v.re;
      im += t;
      idx += a;
      if (idx >= q) idx -= q;
    }
    out.emplace_back(Complex(re, im) * scale, bound);
  }
  return out;
}

// ---------------------------------------------------------------------------
// HurwitzCache

HurwitzCache::HurwitzCache(Complex s, bool regular) : s_(std::move(s)), regular_(regular) {}

std::size_t HurwitzCache::Hash::operator()(const Rational& r) const noexcept {
  const auto a = static_cast<std::uint64_t>(r.numerator());
  const auto b = static_cast<std::uint64_t>(r.denominator());
  return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL));
}

ComplexApprox HurwitzCache::get(const Rational& c) {
  {
    std::shared_lock lock(mutex_);
    auto it = values_.find(c);
    if (it != values_.end()) return it->second;
  }
  ComplexApprox v = regular_ ? hurwitz_regular(c, s_) : hurwitz_em(c, s_);
  std::unique_lock lock(mutex_);
  return values_.emplace(c, std::move(v)).first->second;
}

std::size_t HurwitzCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

}  // namespace lerchz

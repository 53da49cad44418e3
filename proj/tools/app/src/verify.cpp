#include "lerchz_app/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "lerchz/arith.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz/nonvanishing.hpp"
#include "lerchz/parallel.hpp"
#include "lerchz/wide_moments.hpp"
#include "lerchz_app/envelope.hpp"

namespace lerchz::app {

namespace {

using Row = std::vector<std::string>;

std::string str(std::int64_t v) { return std::to_string(v); }

void push_complex(Row& row, const ComplexApprox& v) {
  row.push_back(format_real(v.value.re));
  row.push_back(format_real(v.value.im));
}

void push_agreement(Row& row, const Agreement& a) {
  row.push_back(format_double(a.difference));
  row.push_back(format_double(a.bound));
  row.push_back(format_bool(a.ok()));
}

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<std::int64_t> primes_between(std::int64_t from, std::int64_t to) {
  std::vector<std::int64_t> out;
  for (std::int64_t p : primes_up_to(to))
    if (p >= from) out.push_back(p);
  if (out.empty()) throw ParseError("no primes in [" + str(from) + ", " + str(to) + "]");
  return out;
}

std::vector<Complex> parse_s_values(const std::vector<std::string>& given, const std::vector<std::string>& fallback) {
  std::vector<Complex> out;
  for (const auto& t : given.empty() ? fallback : given) out.push_back(parse_complex(t));
  return out;
}

std::string describe_twists(const std::vector<DirichletCharacter>& twists) {
  std::string out;
  for (const auto& t : twists) {
    if (!out.empty()) out += ' ';
    out += t.describe();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Asymptotic sweeps

struct SweepPoint {
  Row keys;
  double size = 0;
  ComplexApprox computed;
  ComplexApprox predicted;
  double shape = 0;
};

SuiteResult envelope_suite(std::vector<std::string> key_columns, const std::vector<SweepPoint>& points,
                           const RunConfig& config) {
  SuiteResult out;
  auto& r = out.report;
  r.columns = std::move(key_columns);
  for (const char* c : {"computed_re", "computed_im", "error", "predicted_re", "predicted_im", "residual", "shape",
                        "ratio", "envelope", "within"})
    r.columns.emplace_back(c);
  std::vector<EnvelopePoint> env;
  for (const auto& p : points)
    env.push_back({p.size, to_double(abs(p.computed.value - p.predicted.value)), p.shape});
  const auto fit = fit_envelope(env);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Row row = points[i].keys;
    push_complex(row, points[i].computed);
    row.push_back(format_double(points[i].computed.err));
    push_complex(row, points[i].predicted);
    row.push_back(format_double(env[i].residual));
    row.push_back(format_double(env[i].shape));
    row.push_back(format_double(env[i].residual / env[i].shape));
    row.push_back(format_double(fit.fitted_c * env[i].shape));
    row.push_back(format_bool(fit.within[i]));
    r.add_row(std::move(row));
  }
  out.envelope_points = static_cast<std::int64_t>(points.size());
  out.envelope_failures = fit.failures;
  r.summary = {{"points", str(out.envelope_points)},
               {"fitted_c", format_double(fit.fitted_c)},
               {"sup_c", format_double(fit.sup_c)},
               {"envelope_failures", str(fit.failures)},
               {"failure_rate", format_double(points.empty() ? 0.0
                                                             : static_cast<double>(fit.failures) /
                                                                   static_cast<double>(points.size()))},
               {"residual_slope", format_double(fit.residual_slope)}};
  (void)config;
  return out;
}

template <class F>
std::vector<SweepPoint> sweep(std::size_t n, unsigned workers, F fn) {
  return parallel_map<SweepPoint>(n, workers, fn);
}

SuiteResult power_moment_suite(const RunConfig& c) {
  const auto ms = or_default<int>(c.m, {3});
  const auto primes = primes_between(c.primes_from > 0 ? c.primes_from : 2, c.primes_to > 0 ? c.primes_to : 2003);
  std::vector<std::pair<int, std::int64_t>> grid;
  for (int m : ms)
    for (std::int64_t p : primes) grid.emplace_back(m, p);
  std::vector<SweepPoint> points = sweep(grid.size(), c.workers, [&](std::size_t i) {
    const auto [m, ell] = grid[i];
    const auto pred = predict_power_moment(ell, m);
    return SweepPoint{{str(ell), str(m)}, static_cast<double>(ell), hurwitz_power_moment(ell, m), pred.main,
                      pred.shape};
  });
  // One envelope per width m.
  SuiteResult total;
  for (int m : ms) {
    std::vector<SweepPoint> part;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid[i].first == m) part.push_back(points[i]);
    auto res = envelope_suite({"ell", "m"}, part, c);
    if (total.report.columns.empty()) total.report.columns = res.report.columns;
    for (auto& row : res.report.rows) total.report.rows.push_back(std::move(row));
    for (const auto& [k, v] : res.report.summary) total.report.summary.emplace_back("m" + std::to_string(m) + "_" + k, v);
    total.envelope_points += res.envelope_points;
    total.envelope_failures += res.envelope_failures;
  }
  return total;
}

std::vector<DirichletCharacter> default_twists(const RunConfig& c, std::vector<std::string> fallback) {
  return parse_twists(c.twists.empty() ? fallback : c.twists);
}

SuiteResult character_moment_suite(const RunConfig& c, bool twisted) {
  const auto chis = default_twists(c, {"4:quadratic", "4:quadratic", "4:quadratic"});
  if (chis.size() < 2) throw ParseError("need at least two characters");
  const std::string psi_kind = c.psi.empty() ? (twisted ? "quadratic" : "trivial") : c.psi;
  if (psi_kind != "trivial" && psi_kind != "quadratic") throw ParseError("--psi must be trivial or quadratic");
  const auto primes = primes_between(c.primes_from > 0 ? c.primes_from : 3, c.primes_to > 0 ? c.primes_to : 1000);
  const int m = static_cast<int>(chis.size());
  const Complex half(0.5, 0.0);
  std::vector<SweepPoint> points = sweep(primes.size(), c.workers, [&](std::size_t i) {
    const std::int64_t ell = primes[i];
    const DirichletCharacter psi =
        psi_kind == "quadratic" ? DirichletCharacter::quadratic(ell) : DirichletCharacter::trivial(1);
    const ComplexApprox value = hurwitz_moment(ell, chis, psi, half);
    const Prediction pred = twisted ? predict_twisted_moment(ell, chis, psi) : predict_character_moment(ell, chis);
    return SweepPoint{{str(ell), str(m)}, static_cast<double>(ell), value, pred.main, pred.shape};
  });
  auto res = envelope_suite({"ell", "m"}, points, c);
  res.report.summary.emplace_back("characters", describe_twists(chis));
  res.report.summary.emplace_back("psi", psi_kind);
  return res;
}

SuiteResult gauss_twisted_suite(const RunConfig& c) {
  const auto qs = or_default<std::int64_t>(c.q, {101, 211, 401});
  const int n = c.n > 0 ? c.n : 3;
  const auto twists = default_twists(c, {"3:quadratic"});
  std::vector<SweepPoint> points = sweep(qs.size(), c.workers, [&](std::size_t i) {
    const std::int64_t q = qs[i];
    const auto pred = predict_gauss_twisted(q, n, twists);
    return SweepPoint{{str(q), str(n)}, static_cast<double>(q), gauss_twisted_moment(q, n, twists), pred.main,
                      pred.shape};
  });
  auto res = envelope_suite({"q", "n"}, points, c);
  // Diagnostics against the main term including the a/q -> 1 end.
  std::vector<EnvelopePoint> two_sided;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto p = predict_gauss_twisted_two_sided(qs[i], n, twists);
    two_sided.push_back({static_cast<double>(qs[i]), to_double(abs(points[i].computed.value - p.main.value)), p.shape});
  }
  const auto fit2 = fit_envelope(two_sided);
  res.report.summary.emplace_back("two_sided_fitted_c", format_double(fit2.fitted_c));
  res.report.summary.emplace_back("two_sided_sup_c", format_double(fit2.sup_c));
  res.report.summary.emplace_back("two_sided_residual_slope", format_double(fit2.residual_slope));
  // Character-side cross-check of the Lerch-side assembly at a small prime.
  const auto lerch = gauss_twisted_wide_lerch(5, n, twists);
  const auto brute = gauss_twisted_wide_brute(5, n, twists);
  const auto agreement = compare(lerch, brute);
  res.identity_checks = 1;
  res.identity_failures = agreement.ok() ? 0 : 1;
  res.report.summary.emplace_back("twists", describe_twists(twists));
  res.report.summary.emplace_back("character_side_q5_difference", format_double(agreement.difference));
  res.report.summary.emplace_back("character_side_q5_bound", format_double(agreement.bound));
  res.report.summary.emplace_back("character_side_q5_pass", format_bool(agreement.ok()));
  return res;
}

SuiteResult double_average_suite(const RunConfig& c) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs = c.pairs;
  if (pairs.empty()) pairs = {{101, 101}, {301, 151}, {151, 301}};
  const auto ms = or_default<int>(c.m, {2});
  std::vector<std::tuple<std::int64_t, std::int64_t, int>> grid;
  for (int m : ms)
    for (auto [q, ell] : pairs) grid.emplace_back(q, ell, m);
  // Points are evaluated in turn; each one parallelizes internally.
  std::vector<SweepPoint> points;
  for (const auto& [q, ell, m] : grid) {
    const auto pred = predict_double_average(q, ell, m);
    points.push_back(SweepPoint{{str(q), str(ell), str(m)},
                                static_cast<double>(q * ell),
                                double_average_moment(q, ell, m, Complex(0.5, 0.0), c.workers),
                                pred.main,
                                pred.shape});
  }
  return envelope_suite({"q", "ell", "m"}, points, c);
}

SuiteResult t_coefficient_suite(const RunConfig& c) {
  const auto twists = default_twists(c, {"3:quadratic", "3:quadratic", "3:quadratic"});
  std::int64_t ell = 1;
  for (const auto& t : twists) ell = lcm(ell, t.modulus());
  auto primes = primes_between(c.primes_from > 0 ? c.primes_from : 5, c.primes_to > 0 ? c.primes_to : 5003);
  if (c.a != 0) std::erase_if(primes, [&](std::int64_t p) { return mod(p, ell) != mod(c.a, ell); });
  std::erase_if(primes, [&](std::int64_t p) { return ell % p == 0; });
  const auto limit = predict_t_limit(1, twists).main;
  std::vector<SweepPoint> points = sweep(primes.size(), c.workers, [&](std::size_t i) {
    const std::int64_t d = primes[i];
    return SweepPoint{{str(d), str(mod(d, ell))}, static_cast<double>(d), t_coefficient(d, twists), limit,
                      predict_t_limit(d, twists).shape};
  });
  auto res = envelope_suite({"d", "class"}, points, c);
  res.report.summary.emplace_back("twists", describe_twists(twists));
  for (std::int64_t q : or_default<std::int64_t>(c.q, {4, 6, 9, 12})) {
    const auto id = mobius_identity(q, twists);
    ++res.identity_checks;
    if (!id.agreement.ok()) ++res.identity_failures;
    res.report.summary.emplace_back("identity_q" + str(q) + "_difference", format_double(id.agreement.difference));
    res.report.summary.emplace_back("identity_q" + str(q) + "_bound", format_double(id.agreement.bound));
    res.report.summary.emplace_back("identity_q" + str(q) + "_pass", format_bool(id.agreement.ok()));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Identity suites

SuiteResult fourier_suite(const RunConfig& c) {
  const auto qs = or_default<std::int64_t>(c.q, [] {
    std::vector<std::int64_t> v;
    for (std::int64_t q = 1; q <= 13; ++q) v.push_back(q);
    return v;
  }());
  const auto ms = or_default<int>(c.m, {2, 3});
  const auto twists = parse_twists(c.twists);
  std::vector<std::tuple<std::int64_t, int, std::int64_t>> grid;
  for (std::int64_t q : qs) {
    if (q < 1) throw ParseError("moduli must be positive");
    for (int m : ms) {
      if (!twists.empty() && static_cast<int>(twists.size()) != m)
        throw ParseError("--twist count must equal m");
      for (std::int64_t chi = 0; chi < totient(q); ++chi) grid.emplace_back(q, m, chi);
    }
  }
  struct Value {
    ComplexApprox brute, fourier;
  };
  const auto values = parallel_map<Value>(grid.size(), c.workers, [&](std::size_t i) {
    const auto [q, m, chi] = grid[i];
    WideMomentSpec spec(DirichletCharacter::from_index(q, chi), m, twists);
    return Value{wide_moment_brute(spec), wide_moment_fourier(spec)};
  });
  SuiteResult out;
  out.report.columns = {"q",          "m",          "chi",        "brute_re", "brute_im", "fourier_re",
                        "fourier_im", "difference", "bound",      "pass"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [q, m, chi] = grid[i];
    Row row{str(q), str(m), str(chi)};
    push_complex(row, values[i].brute);
    push_complex(row, values[i].fourier);
    const auto a = compare(values[i].brute, values[i].fourier);
    push_agreement(row, a);
    out.report.add_row(std::move(row));
    ++out.identity_checks;
    if (!a.ok()) ++out.identity_failures;
  }
  return out;
}

SuiteResult birch_stevens_suite(const RunConfig& c) {
  const auto qs = or_default<std::int64_t>(c.q, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto ells = or_default<std::int64_t>(c.ell, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto svals = parse_s_values(c.s, {"2", "1.5", "0.5"});
  std::vector<std::tuple<std::int64_t, std::int64_t, std::size_t>> grid;
  for (std::size_t si = 0; si < svals.size(); ++si)
    for (std::int64_t q : qs)
      for (std::int64_t ell : ells) grid.emplace_back(q, ell, si);
  const auto blocks = parallel_map<std::vector<Row>>(grid.size(), c.workers, [&](std::size_t i) {
    const auto [q, ell, si] = grid[i];
    const Complex& s = svals[si];
    const LerchGrid lg(q, ell, s);
    std::vector<Row> rows;
    for (const auto& chi : enumerate_characters(q))
      for (const auto& psi : enumerate_characters(ell)) {
        const auto r = birch_stevens_residual(chi, psi, s, &lg);
        Row row{str(q), str(ell), str(chi.index()), str(psi.index()), c.s.empty() ? to_string(s.re, 6) : c.s[si]};
        push_complex(row, r.lhs);
        push_complex(row, r.rhs);
        push_agreement(row, r.agreement);
        rows.push_back(std::move(row));
      }
    return rows;
  });
  SuiteResult out;
  out.report.columns = {"q",      "ell",    "chi",    "psi",        "s",     "lhs_re",
                        "lhs_im", "rhs_re", "rhs_im", "difference", "bound", "pass"};
  for (const auto& block : blocks)
    for (const auto& row : block) {
      ++out.identity_checks;
      if (row.back() != "true") ++out.identity_failures;
      out.report.add_row(row);
    }
  return out;
}

SuiteResult functional_equation_suite(const RunConfig& c) {
  const int n = c.points > 0 ? c.points : 50;
  // 1 - s samples with rational coefficients.
  const std::vector<std::string> one_minus_s = {"-0.5", "0.25", "0.5+0.3333333333333333333333333333333333333333i",
                                                "0.75-0.5i", "-0.25+2i"};
  std::mt19937_64 rng(c.seed);
  auto rational_in_unit = [&] {
    std::uniform_int_distribution<std::int64_t> den(2, 60);
    const std::int64_t d = den(rng);
    std::uniform_int_distribution<std::int64_t> num(1, d - 1);
    return Rational(num(rng), d);
  };
  struct Point {
    Rational alpha, c;
    std::string one_minus_s;
  };
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const Rational alpha = rational_in_unit();
    const Rational cc = rational_in_unit();
    pts.push_back({alpha, cc, one_minus_s[static_cast<std::size_t>(i) % one_minus_s.size()]});
  }
  const auto checks = parallel_map<FunctionalEquationCheck>(pts.size(), c.workers, [&](std::size_t i) {
    const Complex s = Complex(Real(1)) - parse_complex(pts[i].one_minus_s);
    return functional_equation_check(LerchArgument(pts[i].alpha, pts[i].c, s));
  });
  SuiteResult out;
  out.report.columns = {"alpha",  "c",      "one_minus_s", "lhs_re", "lhs_im",
                        "rhs_re", "rhs_im", "difference",  "bound",  "pass"};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Row row{to_string(pts[i].alpha), to_string(pts[i].c), pts[i].one_minus_s};
    push_complex(row, checks[i].lhs);
    push_complex(row, checks[i].rhs);
    push_agreement(row, checks[i].agreement);
    out.report.add_row(std::move(row));
    ++out.identity_checks;
    if (!checks[i].agreement.ok()) ++out.identity_failures;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-vanishing

SuiteResult nonvanishing_suite(const RunConfig& c, std::vector<std::int64_t> default_q,
                               std::vector<std::string> default_twist_list, bool with_shape) {
  const auto qs = or_default<std::int64_t>(c.q, std::move(default_q));
  const auto ms = or_default<int>(c.m, {3});
  SuiteResult out;
  out.report.columns = {"q",        "m",         "family_size", "certified", "indeterminate", "first_re",
                        "first_im", "second_re", "cs_bound",    "cs_degenerate", "cs_valid"};
  if (with_shape) {
    out.report.columns.emplace_back("count_log_ratio");
    out.report.columns.emplace_back("second_moment_ratio");
  }
  for (std::int64_t q : qs)
    for (int m : ms) {
      std::vector<DirichletCharacter> twists;
      if (c.twists.empty()) {
        twists = parse_twists(std::vector<std::string>(static_cast<std::size_t>(m), default_twist_list.front()));
      } else {
        twists = parse_twists(c.twists);
        if (static_cast<int>(twists.size()) != m) throw ParseError("--twist count must equal m");
      }
      WideMomentSpec spec(DirichletCharacter::trivial(q), m, twists);
      spec.primitive_only = c.primitive;
      NonvanishingOptions options;
      options.workers = c.workers;
      options.threshold_multiplier = c.threshold_multiplier;
      const auto r = count_nonvanishing(spec, options);
      const bool valid = r.cauchy_schwarz.degenerate ||
                         r.cauchy_schwarz.value <= static_cast<double>(r.certified + r.indeterminate);
      ++out.identity_checks;
      if (!valid) ++out.identity_failures;
      Row row{str(q), str(m), str(r.family_size), str(r.certified), str(r.indeterminate)};
      push_complex(row, r.first_moment);
      row.push_back(format_real(r.second_moment.value.re));
      row.push_back(format_double(r.cauchy_schwarz.value));
      row.push_back(format_bool(r.cauchy_schwarz.degenerate));
      row.push_back(format_bool(valid));
      if (with_shape) {
        const double lq = std::log(static_cast<double>(q));
        row.push_back(format_double(static_cast<double>(r.certified) * std::pow(lq, m) /
                                    std::pow(static_cast<double>(q), m - 1)));
        const bool trivial = std::all_of(twists.begin(), twists.end(), [](const auto& t) { return t.modulus() == 1; });
        row.push_back(trivial && is_prime(q) && q > 2 && m >= 3 && c.primitive
                          ? format_double(second_moment_check(q, m, c.workers).ratio)
                          : "");
      }
      out.report.add_row(std::move(row));
    }
  return out;
}

using SuiteFn = std::function<SuiteResult(const RunConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"fourier", fourier_suite},
      {"birch-stevens", birch_stevens_suite},
      {"functional-equation", functional_equation_suite},
      {"thm3.1", [](const RunConfig& c) { return character_moment_suite(c, false); }},
      {"thm3.4", [](const RunConfig& c) { return character_moment_suite(c, true); }},
      {"thm3.5", power_moment_suite},
      {"thm3.6", gauss_twisted_suite},
      {"thm3.7", double_average_suite},
      {"thm1.1", t_coefficient_suite},
      {"thm1.2", [](const RunConfig& c) { return nonvanishing_suite(c, {11, 13}, {"3:quadratic"}, false); }},
      {"thm1.3", [](const RunConfig& c) { return nonvanishing_suite(c, {101, 211, 401}, {"trivial"}, true); }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : registry()) v.push_back(k);
    return v;
  }();
  return ids;
}

bool is_identity_suite(const std::string& id) {
  return id == "fourier" || id == "birch-stevens" || id == "functional-equation";
}

SuiteResult run_verify(const RunConfig& config) {
  const auto it = registry().find(config.id);
  if (it == registry().end()) throw ParseError("unknown verify id '" + config.id + "'");
  return it->second(config);
}

SuiteResult run_count_nonvanishing(const RunConfig& config) {
  if (config.q.empty()) throw ParseError("count-nonvanishing needs --q");
  return nonvanishing_suite(config, {}, {"trivial"}, true);
}

SuiteResult run_coeffs(const RunConfig& c) {
  const auto twists = default_twists(c, {"3:quadratic", "3:quadratic", "3:quadratic"});
  const int K = c.K > 0 ? c.K : 2;
  const std::int64_t d_min = c.primes_from > 0 ? c.primes_from : 50;
  const std::int64_t d_max = c.primes_to > 0 ? c.primes_to : 2000;
  std::int64_t ell = 1;
  for (const auto& t : twists) ell = lcm(ell, t.modulus());
  std::vector<std::int64_t> classes;
  if (c.a != 0) {
    classes.push_back(mod(c.a, ell));
  } else {
    for (std::int64_t a = 0; a < ell; ++a)
      if (gcd(a, ell) == 1) classes.push_back(a);
  }
  SuiteResult out;
  auto& r = out.report;
  r.columns = {"class", "ell", "m", "K", "moduli", "main", "expected_main", "log_coefficient"};
  for (int k = 1; k < K; ++k) r.columns.push_back("tail_" + std::to_string(k));
  r.columns.emplace_back("rms_residual");
  r.columns.emplace_back("condition_number");
  for (std::int64_t a : classes) {
    const auto e = t_expansion(twists, a, K, d_min, d_max, c.workers);
    Row row{str(e.a), str(e.ell), str(e.m), str(e.K), str(static_cast<std::int64_t>(e.moduli.size())),
            format_double(e.main), format_double(e.expected_main), format_double(e.log_coefficient)};
    for (double t : e.tail) row.push_back(format_double(t));
    row.push_back(format_double(e.rms_residual));
    row.push_back(format_double(e.condition_number));
    r.add_row(std::move(row));
  }
  r.summary = {{"twists", describe_twists(twists)}, {"d_min", str(d_min)}, {"d_max", str(d_max)}};
  return out;
}

}  // namespace lerchz::app

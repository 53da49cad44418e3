// Acceptance checks. Prints one PASS/FAIL line per criterion; exits 1 when
// any selected criterion fails.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lerchz/config.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz/nonvanishing.hpp"
#include "lerchz/wide_moments.hpp"
#include "lerchz_app/envelope.hpp"
#include "lerchz_app/verify.hpp"

using namespace lerchz;
using namespace lerchz::app;

namespace {

struct Options {
  unsigned precision = 40;
  unsigned workers = 1;
};

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double column(const MomentReport& r, const std::vector<std::string>& row, const std::string& name) {
  const auto it = std::find(r.columns.begin(), r.columns.end(), name);
  return std::stod(row.at(static_cast<std::size_t>(it - r.columns.begin())));
}

std::string summary(const MomentReport& r, const std::string& key) {
  const auto* v = r.find_summary(key);
  return v ? *v : std::string("nan");
}

SuiteResult verify(const Options& o, const std::string& id, const std::function<void(RunConfig&)>& tweak = {}) {
  RunConfig c;
  c.command = "verify";
  c.id = id;
  c.precision = o.precision;
  c.workers = o.workers;
  if (tweak) tweak(c);
  return run_verify(c);
}

Outcome identity(const Options& o, const std::string& id) {
  const auto r = verify(o, id);
  return {r.identity_checks > 0 && r.identity_failures == 0,
          std::to_string(r.identity_checks - r.identity_failures) + "/" + std::to_string(r.identity_checks) +
              " checks within bounds"};
}

Outcome criterion4(const Options& o) {
  std::mt19937_64 rng(20240);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_real_distribution<double> re(0.1, 3.0), im(-5, 5);
  const unsigned reference_digits = 2 * o.precision;
  int points = 0, pairs = 0, disagreements = 0, evaluations = 0, honest = 0;
  while (points < 200) {
    const int ra = den(rng), rc = den(rng);
    const Rational alpha(std::uniform_int_distribution<int>(0, ra - 1)(rng), ra);
    const Rational c(std::uniform_int_distribution<int>(1, rc)(rng), rc);
    const Complex s(Real(re(rng)), Real(im(rng)));
    if (alpha.numerator() == 0 && to_double(abs(s - Complex(Real(1)))) < 0.2) continue;
    const LerchArgument arg(alpha, c, s);
    const auto routes = applicable_routes(arg);
    if (routes.size() < 2) continue;
    ++points;
    std::vector<ComplexApprox> values;
    for (Route route : routes) values.push_back(lerch_route(arg, route));
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        ++pairs;
        if (!compare(values[i], values[j]).ok()) ++disagreements;
      }
    ConfigScope high(reference_digits);
    const LerchArgument ref_arg(alpha, c, s);
    for (std::size_t i = 0; i < routes.size(); ++i) {
      const auto ref = lerch_route(ref_arg, routes[i]);
      ++evaluations;
      if (to_double(abs(values[i].value - ref.value)) <= values[i].err + ref.err) ++honest;
    }
  }
  const double honesty = static_cast<double>(honest) / evaluations;
  return {disagreements == 0 && honesty >= 0.99,
          std::to_string(points) + " points, " + std::to_string(pairs - disagreements) + "/" + std::to_string(pairs) +
              " route pairs agree, bounds honest for " + fmt(100 * honesty) + "% of " + std::to_string(evaluations) +
              " evaluations vs P=" + std::to_string(reference_digits)};
}

Outcome criterion5(const Options& o) {
  const auto r = verify(o, "thm3.5", [](RunConfig& c) {
    c.m = {3, 4, 6};
    c.primes_to = 2003;
  });
  bool pass = true;
  std::ostringstream d;
  for (int m : {3, 4, 6}) {
    double sup = 0;
    std::vector<double> ell, res;
    for (const auto& row : r.report.rows) {
      if (column(r.report, row, "m") != m) continue;
      const double l = column(r.report, row, "ell");
      if (l < 101) continue;
      sup = std::max(sup, column(r.report, row, "ratio"));
      ell.push_back(l);
      res.push_back(column(r.report, row, "residual"));
    }
    pass = pass && sup <= 20;
    d << "m=" << m << " C=" << fmt(sup);
    if (m != 3) {
      const double slope = log_log_slope(ell, res);
      const bool ok = std::abs(slope - (m - 1) / 2.0) <= 0.15;
      pass = pass && ok;
      d << " slope=" << fmt(slope) << " (target " << fmt((m - 1) / 2.0) << ")";
    }
    d << "; ";
  }
  d << "ell >= 101";
  return {pass, d.str()};
}

Outcome criterion6(const Options& o) {
  const auto r = verify(o, "thm1.1", [](RunConfig& c) {
    c.primes_from = 5;
    c.primes_to = 5003;
  });
  std::map<int, double> sup;
  for (const auto& row : r.report.rows) {
    const int cls = static_cast<int>(column(r.report, row, "class"));
    sup[cls] = std::max(sup[cls], column(r.report, row, "ratio"));
  }
  bool pass = r.identity_failures == 0 && r.identity_checks == 4;
  std::ostringstream d;
  for (const auto& [cls, c] : sup) {
    pass = pass && c <= 20;
    d << "q = " << cls << " mod 3: C=" << fmt(c) << "; ";
  }
  d << "held-out C=" << fmt(std::stod(summary(r.report, "fitted_c"))) << "; Mobius identity " << r.identity_checks - r.identity_failures
    << "/" << r.identity_checks << " at q in {4,6,9,12}";
  return {pass, d.str()};
}

Outcome criterion7(const Options& o) {
  const auto r = verify(o, "thm3.6");
  const double sup = std::stod(summary(r.report, "sup_c"));
  const bool side = summary(r.report, "character_side_q5_pass") == "true";
  return {sup <= 20 && side, "C=" + fmt(sup) + " (two-sided main term C=" + fmt(std::stod(summary(r.report, "two_sided_sup_c"))) +
                                 "); character side q=5 " + (side ? "matches" : "differs")};
}

Outcome criterion8(const Options& o) {
  const auto r = verify(o, "thm3.7");
  const double sup = std::stod(summary(r.report, "sup_c"));
  return {sup <= 20, "C=" + fmt(sup) + " over (101,101), (301,151), (151,301)"};
}

Outcome criterion9(const Options&) {
  double worst = 0;
  for (int k = 1; k <= 6; ++k) {
    const auto coeffs = expinc2_profile(Rational(k, 7), 200);
    for (unsigned n = 1; n < coeffs.size(); ++n)
      worst = std::max(worst, std::sqrt(static_cast<double>(n)) * coeffs[n].magnitude_upper());
  }
  return {worst <= 10, "max n^(1/2)|C_n| = " + fmt(worst) + " over alpha = k/7, n <= 200"};
}

// Independent recount: a product is certified exactly when each factor is.
std::int64_t factorized_recount(const WideMomentSpec& spec, double multiplier) {
  const auto chars = enumerate_characters(spec.q);
  std::vector<std::vector<bool>> flag(spec.twists.size());
  for (std::size_t i = 0; i < spec.twists.size(); ++i)
    for (const auto& chi : chars)
      flag[i].push_back(certified_nonzero(dirichlet_l(spec.twists[i] * chi, spec.s), multiplier));
  std::int64_t count = 0;
  for_each_wide_tuple(spec, [&](const std::vector<std::int64_t>& idx) {
    bool all = true;
    for (std::size_t i = 0; i < idx.size(); ++i) all = all && flag[i][static_cast<std::size_t>(idx[i])];
    if (all) ++count;
  });
  return count;
}

Outcome criterion10(const Options& o) {
  bool pass = true;
  std::ostringstream d;
  for (std::int64_t q : {11, 101}) {
    WideMomentSpec spec(q, 3);
    spec.primitive_only = true;
    NonvanishingOptions options;
    options.workers = o.workers;
    const auto r = count_nonvanishing(spec, options);
    const auto recount = factorized_recount(spec, options.threshold_multiplier);
    const double cs = r.cauchy_schwarz.degenerate ? 0.0 : r.cauchy_schwarz.value;
    pass = pass && r.certified == recount && cs <= static_cast<double>(r.certified);
    d << "q=" << q << ": certified " << r.certified << "/" << r.family_size << ", recount " << recount << ", CS "
      << fmt(cs);
    if (q == 101) {
      const double lq = std::log(static_cast<double>(q));
      const double ratio = static_cast<double>(r.certified) * lq * lq * lq / static_cast<double>(q * q);
      pass = pass && r.certified == r.family_size && ratio >= 0.05 && ratio <= 50;
      d << ", count (log q)^3/q^2 = " << fmt(ratio) << " (range [0.05, 50])";
    } else {
      d << "; ";
    }
  }
  return {pass, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance checks");
  std::vector<int> selected;
  Options o;
  o.workers = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 10));
  app.add_option("-P,--precision", o.precision, "Decimal digits")->check(CLI::Range(20, 2000));
  app.add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  if (selected.empty())
    for (int i = 1; i <= 10; ++i) selected.push_back(i);

  const std::map<int, std::function<Outcome(const Options&)>> criteria = {
      {1, [](const Options& x) { return identity(x, "fourier"); }},
      {2, [](const Options& x) { return identity(x, "birch-stevens"); }},
      {3, [](const Options& x) { return identity(x, "functional-equation"); }},
      {4, criterion4},
      {5, criterion5},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, criterion10},
  };
  bool all = true;
  for (int id : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      ConfigScope scope(o.precision);
      out = criteria.at(id)(o);
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.pass;
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << "  " << out.detail << "  [" << fmt(secs)
              << " s]" << std::endl;
  }
  return all ? 0 : 1;
}

#include "lerchz_app/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>

#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz_app/verify.hpp"

#ifndef LERCHZ_VERSION
#define LERCHZ_VERSION "0.0.0"
#endif

namespace lerchz::app {

namespace {

struct EvalArgs {
  std::string kind;
  std::string alpha = "0", c = "1", s;
  std::string route = "auto";
  bool dual = false;
  std::int64_t modulus = 1;
  std::string character = "trivial";
  std::int64_t b = 1, ell = 1;
  bool json = false;
};

struct SweepArgs {
  std::vector<std::string> q, ell, m, pairs, s, twists;
  std::string format = "csv";
};

Route parse_route(const std::string& name) {
  for (Route r : {Route::Series, Route::Hurwitz, Route::Taylor, Route::Integral, Route::Continuation})
    if (route_name(r) == name || (r == Route::Hurwitz && name == "hurwitz")) return r;
  throw ParseError("unknown route '" + name + "'");
}

std::string rational_arg(const std::string& name, const std::string& text, Rational& out) {
  try {
    out = parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + name + ": " + e.what());
  }
  return text;
}

Complex complex_arg(const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--s: ") + e.what());
  }
}

int run_eval(const EvalArgs& a, std::ostream& out) {
  if (a.s.empty()) throw ParseError("--s is required");
  const Complex s = complex_arg(a.s);
  ComplexApprox value;
  std::string route;
  if (a.kind == "lerch") {
    Rational alpha, c;
    rational_arg("alpha", a.alpha, alpha);
    rational_arg("c", a.c, c);
    const LerchArgument arg(alpha, c, s);
    if (a.route == "auto") {
      const auto r = lerch_eval_routed(arg, a.dual);
      value = r.value;
      route = route_name(r.route);
    } else {
      const Route r = parse_route(a.route);
      value = lerch_route(arg, r);
      route = route_name(r);
    }
  } else if (a.kind == "lfun") {
    value = dirichlet_l(parse_character(a.modulus, a.character), s);
    route = "hurwitz-decomposition";
  } else if (a.kind == "twisted-hurwitz") {
    const TwistedRoute r = a.route == "character" ? TwistedRoute::CharacterSum : TwistedRoute::ResidueSplit;
    if (a.route != "auto" && a.route != "residue" && a.route != "character")
      throw ParseError("twisted-hurwitz route must be residue or character");
    value = twisted_hurwitz_l(TwistedHurwitzArg(parse_character(a.modulus, a.character), a.b, a.ell, s), r);
    route = r == TwistedRoute::CharacterSum ? "character-sum" : "residue-split";
  } else {
    Rational alpha;
    rational_arg("alpha", a.alpha, alpha);
    value = twisted_periodic_l(TwistedPeriodicArg{alpha, parse_character(a.modulus, a.character), s});
    route = "residue-split";
  }
  const int digits = static_cast<int>(current_config().digits);
  if (a.json) {
    nlohmann::ordered_json j;
    j["function"] = a.kind;
    j["value_re"] = to_string(value.value.re, digits);
    j["value_im"] = to_string(value.value.im, digits);
    j["error"] = format_double(value.err);
    j["route"] = route;
    out << j.dump(2) << "\n";
  } else {
    out << "value: " << to_string(value.value, digits) << "\n"
        << "error: " << format_double(value.err) << "\n"
        << "route: " << route << "\n";
  }
  return kExitOk;
}

void write_report(const MomentReport& report, const RunConfig& config, std::ostream& out) {
  const std::string text = config.format == Format::Json ? to_json(report) : to_csv(report);
  if (config.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw Error("cannot open '" + config.output + "' for writing");
  file << text;
}

// Arguments with the output path removed, so reports do not depend on where
// they are written.
std::string normalized_arguments(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--output" || args[i] == "-o") {
      ++i;
      continue;
    }
    if (args[i].rfind("--output=", 0) == 0) continue;
    if (!out.empty()) out += ' ';
    out += args[i];
  }
  return out;
}

void fill_sweep(const SweepArgs& s, RunConfig& c) {
  c.q = parse_int_list(s.q);
  c.ell = parse_int_list(s.ell);
  for (auto v : parse_int_list(s.m)) c.m.push_back(static_cast<int>(v));
  for (const auto& p : s.pairs) c.pairs.push_back(parse_pair(p));
  c.s = s.s;
  c.twists = s.twists;
  c.format = parse_format(s.format);
}

int finish_suite(const SuiteResult& result, const RunConfig& config, const std::vector<std::string>& args,
                 std::ostream& out, std::ostream& err) {
  MomentReport report = result.report;
  report.meta = {{"tool", "lerchz"},
                 {"version", LERCHZ_VERSION},
                 {"command", config.command},
                 {"id", config.id},
                 {"precision", std::to_string(config.precision)},
                 {"seed", std::to_string(config.seed)},
                 {"workers", std::to_string(config.workers)},
                 {"arguments", normalized_arguments(args)}};
  report.summary.emplace_back("identity_checks", std::to_string(result.identity_checks));
  report.summary.emplace_back("identity_failures", std::to_string(result.identity_failures));
  if (result.identity_checks > 0) {
    const double rate = 1.0 - static_cast<double>(result.identity_failures) / static_cast<double>(result.identity_checks);
    report.summary.emplace_back("identity_pass_rate", format_double(rate));
  }
  write_report(report, config, out);
  if (result.identity_failures > 0) {
    err << "error: " << result.identity_failures << " of " << result.identity_checks
        << " identity checks failed beyond their bounds\n";
    return kExitIdentity;
  }
  if (result.envelope_points > 0 && result.envelope_failures > 0) {
    const double rate = static_cast<double>(result.envelope_failures) / static_cast<double>(result.envelope_points);
    err << "warning: " << result.envelope_failures << " of " << result.envelope_points
        << " points exceed the fitted envelope\n";
    if (rate > config.max_envelope_failure_rate) return kExitEnvelope;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lerch zeta and Dirichlet L-function engine with wide-moment verification", "lerchz"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.set_version_flag("--version", LERCHZ_VERSION);

  RunConfig config;
  std::string precision_text;
  app.add_option("-P,--precision", precision_text, "Decimal digits (default: LERCHZ_PRECISION or 40)");
  app.add_option("--workers", config.workers, "Worker threads (0: all cores)")->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized grids")->capture_default_str();
  app.add_option("-o,--output", config.output, "Output file (default: standard output)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a single value");
  eval->require_subcommand(1);
  auto add_s = [&](CLI::App* sub) { sub->add_option("--s", ev.s, "Complex argument re[+imi]")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", ev.json, "Print a JSON record"); };
  auto add_char = [&](CLI::App* sub) {
    sub->add_option("--modulus", ev.modulus, "Character modulus")->capture_default_str();
    sub->add_option("--char", ev.character, "trivial, quadratic, an index or an exponent vector")
        ->capture_default_str();
  };
  auto* lerch = eval->add_subcommand("lerch", "zeta(alpha, c, s)");
  lerch->add_option("--alpha", ev.alpha, "Rational p/q")->capture_default_str();
  lerch->add_option("--c", ev.c, "Positive rational")->capture_default_str();
  lerch->add_option("--route", ev.route, "auto, series, hurwitz-em, taylor, integral or continuation")
      ->capture_default_str();
  lerch->add_flag("--dual", ev.dual, "Cross-check with a second route");
  add_s(lerch);
  add_json(lerch);
  auto* lfun = eval->add_subcommand("lfun", "L(chi, s)");
  add_char(lfun);
  add_s(lfun);
  add_json(lfun);
  auto* th = eval->add_subcommand("twisted-hurwitz", "L(chi, b/ell, s)");
  add_char(th);
  th->add_option("--b", ev.b, "Residue 1 <= b <= ell")->capture_default_str();
  th->add_option("--ell", ev.ell, "Progression modulus")->capture_default_str();
  th->add_option("--route", ev.route, "residue or character")->capture_default_str();
  add_s(th);
  add_json(th);
  auto* periodic = eval->add_subcommand("periodic", "L(alpha, psi, s)");
  periodic->add_option("--alpha", ev.alpha, "Rational p/q")->capture_default_str();
  add_char(periodic);
  add_s(periodic);
  add_json(periodic);

  SweepArgs sw;
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--q", sw.q, "Moduli: values, lists or ranges a..b");
    sub->add_option("--ell", sw.ell, "Second moduli");
    sub->add_option("--m", sw.m, "Widths");
    sub->add_option("--twist", sw.twists, "Twists: trivial or MOD:DESC");
    sub->add_option("--format", sw.format, "csv or json")->capture_default_str();
  };
  auto* verify = app.add_subcommand("verify", "Run an identity suite or an asymptotic sweep");
  std::string id;
  verify->add_option("id", id, "Suite id")->required()->check(CLI::IsMember(verify_ids()));
  add_sweep(verify);
  verify->add_option("--pairs", sw.pairs, "Pairs QxL");
  verify->add_option("--primes-from", config.primes_from, "Smallest prime of a sweep");
  verify->add_option("--primes-to", config.primes_to, "Largest prime of a sweep");
  verify->add_option("--s", sw.s, "Values of s");
  verify->add_option("--psi", config.psi, "Per-modulus twist: trivial or quadratic");
  verify->add_option("--n", config.n, "Number of periodic factors");
  verify->add_option("--a", config.a, "Residue class of the moduli");
  verify->add_option("--points", config.points, "Random grid size");
  verify->add_option("--max-envelope-failure-rate", config.max_envelope_failure_rate,
                     "Allowed fraction of points outside the fitted envelope")
      ->capture_default_str();
  verify->add_option("--multiplier", config.threshold_multiplier, "Certification threshold multiplier");
  verify->add_flag("!--all-characters", config.primitive, "Include imprimitive characters");

  auto* count = app.add_subcommand("count-nonvanishing", "Count simultaneous non-vanishing over a wide family");
  add_sweep(count);
  count->add_option("--multiplier", config.threshold_multiplier, "Certification threshold multiplier")
      ->capture_default_str();
  count->add_flag("!--all-characters", config.primitive, "Include imprimitive characters");

  auto* coeffs = app.add_subcommand("coeffs", "Fit the expansion coefficients of T(d) per residue class");
  coeffs->add_option("--twist", sw.twists, "Twists: trivial or MOD:DESC");
  coeffs->add_option("--a", config.a, "Residue class (default: all)");
  coeffs->add_option("--K", config.K, "Expansion order");
  coeffs->add_option("--d-min", config.primes_from, "Smallest modulus");
  coeffs->add_option("--d-max", config.primes_to, "Largest modulus");
  coeffs->add_option("--format", sw.format, "csv or json")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    config.precision = precision_text.empty() ? default_precision() : static_cast<unsigned>(std::stoul(precision_text));
  } catch (const std::logic_error&) {
    err << "error: --precision: invalid value '" << precision_text << "'\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    config.validate();
    fill_sweep(sw, config);
    ConfigScope scope(config.precision);
    if (eval->parsed()) {
      for (auto* sub : {lerch, lfun, th, periodic})
        if (sub->parsed()) ev.kind = sub->get_name();
      return run_eval(ev, out);
    }
    if (verify->parsed()) {
      config.command = "verify";
      config.id = id;
      return finish_suite(run_verify(config), config, args, out, err);
    }
    if (count->parsed()) {
      config.command = "count-nonvanishing";
      return finish_suite(run_count_nonvanishing(config), config, args, out, err);
    }
    config.command = "coeffs";
    return finish_suite(run_coeffs(config), config, args, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitPole;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace lerchz::app

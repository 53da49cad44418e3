#include "lerchz_app/run_config.hpp"

#include <cstdlib>
#include <sstream>

#include "lerchz/errors.hpp"

namespace lerchz::app {

namespace {

std::int64_t parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParseError("invalid integer '" + text + "'");
}

}  // namespace

void RunConfig::validate() const {
  if (precision < 20) throw ParseError("precision must be at least 20 digits");
  if (precision > 2000) throw ParseError("precision above 2000 digits is not supported");
  if (max_envelope_failure_rate < 0 || max_envelope_failure_rate > 1)
    throw ParseError("envelope failure rate must lie in [0, 1]");
  if (!(threshold_multiplier >= 1)) throw ParseError("threshold multiplier must be at least 1");
  if (primes_to != 0 && primes_from > primes_to) throw ParseError("empty prime range");
}

unsigned default_precision() {
  const char* env = std::getenv("LERCHZ_PRECISION");
  if (env == nullptr || *env == '\0') return 40;
  const std::int64_t p = parse_int(env);
  if (p < 20 || p > 2000) throw ParseError("LERCHZ_PRECISION must lie in [20, 2000]");
  return static_cast<unsigned>(p);
}

std::vector<std::int64_t> parse_int_list(const std::vector<std::string>& tokens) {
  std::vector<std::int64_t> out;
  for (const auto& token : tokens) {
    std::stringstream in(token);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(parse_int(item));
        continue;
      }
      const std::int64_t lo = parse_int(item.substr(0, dots));
      const std::int64_t hi = parse_int(item.substr(dots + 2));
      if (lo > hi) throw ParseError("empty range '" + item + "'");
      if (hi - lo > 10'000'000) throw ParseError("range '" + item + "' is too long");
      for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty() && !tokens.empty()) throw ParseError("empty list");
  return out;
}

DirichletCharacter parse_twist(const std::string& text) {
  if (text == "trivial" || text == "1") return DirichletCharacter::trivial(1);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("twist '" + text + "' must have the form MOD:DESC or 'trivial'");
  const std::int64_t q = parse_int(text.substr(0, colon));
  if (q < 1) throw ParseError("twist modulus must be positive in '" + text + "'");
  return parse_character(q, text.substr(colon + 1));
}

std::vector<DirichletCharacter> parse_twists(const std::vector<std::string>& texts) {
  std::vector<DirichletCharacter> out;
  for (const auto& t : texts) out.push_back(parse_twist(t));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) throw ParseError("pair '" + text + "' must have the form QxL");
  return {parse_int(text.substr(0, x)), parse_int(text.substr(x + 1))};
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw ParseError("format must be csv or json, got '" + text + "'");
}

std::string format_name(Format f) { return f == Format::Csv ? "csv" : "json"; }

}  // namespace lerchz::app

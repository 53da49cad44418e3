#pragma once

// Settings shared by the commands, and parsers for the compact argument
// forms ("5..13", "3:quadratic", "301x151").

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lerchz/characters.hpp"

namespace lerchz::app {

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::string id;  // verify suite
  unsigned precision = 40;
  Format format = Format::Csv;
  std::string output;  // empty: standard output
  std::uint64_t seed = 1;
  unsigned workers = 1;

  // Sweep ranges; an empty list selects the suite default.
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> ell;
  std::vector<int> m;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::int64_t primes_from = 0;
  std::int64_t primes_to = 0;
  std::vector<std::string> s;
  std::vector<std::string> twists;
  std::string psi;  // per-ell twist: "trivial" or "quadratic"
  int n = 0;
  int K = 0;
  std::int64_t a = 0;  // residue class, 0: all classes
  int points = 0;
  bool primitive = true;
  double threshold_multiplier = 10;
  double max_envelope_failure_rate = 0.25;

  void validate() const;
};

// LERCHZ_PRECISION when set, else 40.
unsigned default_precision();

// Accepts "7", "5..13" and comma-separated lists of either, across tokens.
std::vector<std::int64_t> parse_int_list(const std::vector<std::string>& tokens);
// "trivial", or "MOD:DESC" with DESC as accepted by parse_character.
DirichletCharacter parse_twist(const std::string& text);
std::vector<DirichletCharacter> parse_twists(const std::vector<std::string>& texts);
// "QxL"
std::pair<std::int64_t, std::int64_t> parse_pair(const std::string& text);
Format parse_format(const std::string& text);
std::string format_name(Format f);

}  // namespace lerchz::app

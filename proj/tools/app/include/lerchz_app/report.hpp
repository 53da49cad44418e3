#pragma once

// Tabular reports: ordered metadata, fixed columns, string-valued rows and a
// summary block. Numbers are stored as decimal strings so that nothing is
// lost between the computation, the files and downstream tooling.

#include <string>
#include <utility>
#include <vector>

#include "lerchz/numeric.hpp"

namespace lerchz::app {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct MomentReport {
  KeyValues meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  KeyValues summary;

  void add_row(std::vector<std::string> row);
  const std::string* find_summary(const std::string& key) const;

  friend bool operator==(const MomentReport&, const MomentReport&) = default;
};

// {"meta": {..., "columns": [...]}, "rows": [{column: value}], "summary": {...}}
std::string to_json(const MomentReport& report);
MomentReport report_from_json(const std::string& text);
// Header row plus data rows; fields are quoted when they contain a comma,
// quote or line break.
std::string to_csv(const MomentReport& report);
std::string csv_field(const std::string& field);

// Decimal strings for report cells.
std::string format_real(const Real& x);  // current working digits
std::string format_double(double x);     // shortest round-trip form
std::string format_bool(bool b);

}  // namespace lerchz::app

#include "lerchz_app/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "lerchz/config.hpp"

namespace lerchz::app {

using ordered_json = nlohmann::ordered_json;

void MomentReport::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::logic_error("row has " + std::to_string(row.size()) + " fields, expected " +
                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

const std::string* MomentReport::find_summary(const std::string& key) const {
  for (const auto& [k, v] : summary)
    if (k == key) return &v;
  return nullptr;
}

std::string to_json(const MomentReport& report) {
  ordered_json meta = ordered_json::object();
  for (const auto& [k, v] : report.meta) meta[k] = v;
  meta["columns"] = report.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) r[report.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  ordered_json summary = ordered_json::object();
  for (const auto& [k, v] : report.summary) summary[k] = v;
  ordered_json doc = ordered_json::object();
  doc["meta"] = std::move(meta);
  doc["rows"] = std::move(rows);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

MomentReport report_from_json(const std::string& text) {
  const ordered_json doc = ordered_json::parse(text);
  MomentReport out;
  for (const auto& [k, v] : doc.at("meta").items()) {
    if (k == "columns") {
      out.columns = v.get<std::vector<std::string>>();
    } else {
      out.meta.emplace_back(k, v.get<std::string>());
    }
  }
  for (const auto& r : doc.at("rows")) {
    std::vector<std::string> row;
    for (const auto& c : out.columns) row.push_back(r.at(c).get<std::string>());
    out.rows.push_back(std::move(row));
  }
  for (const auto& [k, v] : doc.at("summary").items()) out.summary.emplace_back(k, v.get<std::string>());
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const MomentReport& report) {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(report.columns);
  for (const auto& row : report.rows) line(row);
  return out;
}

std::string format_real(const Real& x) { return to_string(x, static_cast<int>(current_config().digits)); }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace lerchz::app

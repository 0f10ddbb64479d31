#include <cmath>
#include <cstdio>

#include "tir/cli/table.hpp"
#include "tir/common.hpp"

namespace tir::cli {
namespace {

constexpr std::string_view kModule = "cli_io";

std::string csv_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw Error(ErrorClass::io, kModule, "row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
  os << "# " << meta_line(t) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              os << csv_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              os << v;
            } else {
              os << csv_quote(v);
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

std::string meta_line(const Table& t) { return t.meta.dump(); }

void write_json(std::ostream& os, const Table& t) {
  nlohmann::json j;
  j["meta"] = t.meta;
  j["columns"] = t.columns;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  os << j.dump(1) << '\n';
}

Table read_json(const std::string& text) {
  Table t;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(kModule, std::string("not a table document: ") + e.what());
  }
  t.meta = j.at("meta");
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : r) {
      if (c.is_null()) {
        row.emplace_back(std::nan(""));
      } else if (c.is_number_integer()) {
        row.emplace_back(c.get<std::int64_t>());
      } else if (c.is_number()) {
        row.emplace_back(c.get<double>());
      } else {
        row.emplace_back(c.get<std::string>());
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace tir::cli

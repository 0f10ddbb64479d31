#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace tir::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json meta = nlohmann::json::object();  // scenario, config, hash, ...

  void add_row(std::vector<Cell> row);
};

/// Compact JSON of the metadata, as written after '#' on the first CSV line.
std::string meta_line(const Table& t);

/// '#'-prefixed metadata line (compact JSON), header, rows. Doubles use
/// %.17g; non-finite doubles are written as nan / inf / -inf.
void write_csv(std::ostream& os, const Table& t);

/// {"meta": ..., "columns": [...], "rows": [[...], ...]}; non-finite doubles
/// become null.
void write_json(std::ostream& os, const Table& t);

/// Parses write_json output back; used by the round-trip check.
Table read_json(const std::string& text);

}  // namespace tir::cli

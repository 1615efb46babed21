#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace crown::cli {

inline constexpr int kSchemaVersion = 1;

enum class ColumnType { Text, List, Integer, Number, Boolean };

struct Column {
  std::string name;
  ColumnType type = ColumnType::Text;

  bool operator==(const Column&) const = default;
};

// Scalars live in `text` (numbers in shortest round-trip form); list cells in `items`.
struct Cell {
  std::string text;
  std::vector<std::string> items;

  static Cell of(std::string s) { return {std::move(s), {}}; }
  static Cell list(std::vector<std::string> v) { return {"", std::move(v)}; }
  static Cell integer(long long v) { return {std::to_string(v), {}}; }
  static Cell number(double v);
  static Cell boolean(bool v) { return {v ? "true" : "false", {}}; }

  bool operator==(const Cell&) const = default;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const Table&) const = default;
};

enum class Status { Pass, Fail, Warn };

const char* to_string(Status s);

struct VerificationResult {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  double measured = 0;
  double tolerance = 0;
  std::string detail;
};

struct ReportDocument {
  std::string command;
  std::vector<std::string> argv;
  std::optional<unsigned> seed;
  Table table;
  std::vector<VerificationResult> verification;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  std::optional<double> elapsed_ms;  // only with --timing, so output stays deterministic

  bool any_failure() const;
};

// Verification list as a table: suite, name, status, measured, tolerance, detail.
Table verification_table(const std::vector<VerificationResult>& results);

std::string format_number(double v);

nlohmann::ordered_json to_json(const ReportDocument& doc);
std::string emit_json(const ReportDocument& doc);
// Header row with typed column names ("extremal[]", "count:int", "value:num", "ok:bool"),
// then one tab separated row per table row.
std::string emit_tsv(const Table& table);
// Inverse of emit_tsv; throws std::invalid_argument on malformed input.
Table parse_tsv(const std::string& text);
std::string emit_human(const ReportDocument& doc);

}  // namespace crown::cli

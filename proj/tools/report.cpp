#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crown::cli {

namespace {

const char* suffix(ColumnType t) {
  switch (t) {
    case ColumnType::Text: return "";
    case ColumnType::List: return "[]";
    case ColumnType::Integer: return ":int";
    case ColumnType::Number: return ":num";
    case ColumnType::Boolean: return ":bool";
  }
  return "";
}

Column parse_header(const std::string& h) {
  auto ends = [&](const std::string& s) { return h.size() > s.size() && h.compare(h.size() - s.size(), s.size(), s) == 0; };
  for (auto t : {ColumnType::List, ColumnType::Integer, ColumnType::Number, ColumnType::Boolean}) {
    std::string s = suffix(t);
    if (ends(s)) return {h.substr(0, h.size() - s.size()), t};
  }
  return {h, ColumnType::Text};
}

// Backslash escapes for tab, newline, backslash and (inside lists) comma.
std::string escape(const std::string& s, bool in_list) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case ',':
        if (in_list) out += "\\,";
        else out += c;
        break;
      default: out += c;
    }
  }
  return out;
}

// Splits on an unescaped separator, then unescapes each piece.
std::vector<std::string> split_unescape(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      if (i + 1 >= s.size()) throw std::invalid_argument("dangling escape in tsv");
      char n = s[++i];
      if (n == 't') cur += '\t';
      else if (n == 'n') cur += '\n';
      else cur += n;
    } else if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

// Splits a line on tabs without unescaping (cells unescape later).
std::vector<std::string> split_raw(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '\\' && i + 1 < line.size()) {
      cur += line[i];
      cur += line[++i];
    } else if (line[i] == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += line[i];
    }
  }
  parts.push_back(cur);
  return parts;
}

nlohmann::ordered_json cell_json(const Column& c, const Cell& cell) {
  switch (c.type) {
    case ColumnType::List: return cell.items;
    case ColumnType::Integer: return cell.text.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(std::stoll(cell.text));
    case ColumnType::Number: {
      if (cell.text.empty()) return nullptr;
      double v = std::strtod(cell.text.c_str(), nullptr);
      return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json();
    }
    case ColumnType::Boolean: return cell.text.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(cell.text == "true");
    case ColumnType::Text: return cell.text;
  }
  return nullptr;
}

nlohmann::ordered_json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json();
}

std::string human_cell(const Column& c, const Cell& cell) {
  if (c.type != ColumnType::List) return cell.text;
  std::string s;
  for (size_t i = 0; i < cell.items.size(); ++i) s += (i ? ", " : "") + cell.items[i];
  return s.empty() ? "-" : s;
}

}  // namespace

Cell Cell::number(double v) { return {format_number(v), {}}; }

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
  }
  return "fail";
}

bool ReportDocument::any_failure() const {
  return std::any_of(verification.begin(), verification.end(), [](const auto& v) { return v.status == Status::Fail; });
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Table verification_table(const std::vector<VerificationResult>& results) {
  Table t;
  t.columns = {{"suite", ColumnType::Text},     {"name", ColumnType::Text},
               {"status", ColumnType::Text},    {"measured", ColumnType::Number},
               {"tolerance", ColumnType::Number}, {"detail", ColumnType::Text}};
  for (const auto& v : results)
    t.rows.push_back({Cell::of(v.suite), Cell::of(v.name), Cell::of(to_string(v.status)), Cell::number(v.measured),
                      Cell::number(v.tolerance), Cell::of(v.detail)});
  return t;
}

nlohmann::ordered_json to_json(const ReportDocument& doc) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  nlohmann::ordered_json cmd;
  cmd["name"] = doc.command;
  cmd["argv"] = doc.argv;
  cmd["seed"] = doc.seed ? nlohmann::ordered_json(*doc.seed) : nlohmann::ordered_json();
  j["command"] = cmd;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : doc.table.rows) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (size_t c = 0; c < doc.table.columns.size(); ++c) row[doc.table.columns[c].name] = cell_json(doc.table.columns[c], r[c]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  auto ver = nlohmann::ordered_json::array();
  for (const auto& v : doc.verification) {
    nlohmann::ordered_json e;
    e["suite"] = v.suite;
    e["name"] = v.name;
    e["status"] = to_string(v.status);
    e["measured"] = number_or_null(v.measured);
    e["tolerance"] = number_or_null(v.tolerance);
    e["detail"] = v.detail;
    ver.push_back(e);
  }
  j["verification"] = ver;
  j["warnings"] = doc.warnings;
  j["notes"] = doc.notes;
  if (doc.elapsed_ms) {
    nlohmann::ordered_json t;
    t["elapsed_ms"] = *doc.elapsed_ms;
    j["timing"] = t;
  } else {
    j["timing"] = nullptr;
  }
  return j;
}

std::string emit_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string emit_tsv(const Table& table) {
  std::ostringstream out;
  for (size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "\t" : "") << escape(table.columns[c].name, false) << suffix(table.columns[c].type);
  out << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << "\t";
      if (table.columns[c].type == ColumnType::List) {
        // an empty list is an empty field; a list holding one empty item is written as \e
        if (row[c].items.size() == 1 && row[c].items[0].empty()) {
          out << "\\e";
          continue;
        }
        for (size_t i = 0; i < row[c].items.size(); ++i) out << (i ? "," : "") << escape(row[c].items[i], true);
      } else {
        out << escape(row[c].text, false);
      }
    }
    out << "\n";
  }
  return out.str();
}

Table parse_tsv(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  if (lines.empty()) throw std::invalid_argument("tsv needs a header row");
  Table t;
  for (const auto& h : split_raw(lines[0], '\t')) t.columns.push_back(parse_header(split_unescape(h, '\t')[0]));
  for (size_t l = 1; l < lines.size(); ++l) {
    auto fields = split_raw(lines[l], '\t');
    if (fields.size() != t.columns.size()) throw std::invalid_argument("tsv row " + std::to_string(l) + " has wrong width");
    std::vector<Cell> row;
    for (size_t c = 0; c < fields.size(); ++c) {
      if (t.columns[c].type != ColumnType::List) {
        row.push_back(Cell::of(split_unescape(fields[c], '\t')[0]));
      } else if (fields[c].empty()) {
        row.push_back(Cell::list({}));
      } else if (fields[c] == "\\e") {
        row.push_back(Cell::list({""}));
      } else {
        row.push_back(Cell::list(split_unescape(fields[c], ',')));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string emit_human(const ReportDocument& doc) {
  std::ostringstream out;
  const auto& t = doc.table;
  if (!t.columns.empty() && !t.rows.empty()) {
    std::vector<size_t> width(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); ++c) {
      width[c] = t.columns[c].name.size();
      for (const auto& r : t.rows) width[c] = std::max(width[c], human_cell(t.columns[c], r[c]).size());
    }
    auto emit_row = [&](auto cell_text) {
      std::string s;
      for (size_t c = 0; c < t.columns.size(); ++c) {
        std::string v = cell_text(c);
        s += v;
        if (c + 1 < t.columns.size()) s += std::string(width[c] - v.size() + 2, ' ');
      }
      out << s << "\n";
    };
    emit_row([&](size_t c) { return t.columns[c].name; });
    emit_row([&](size_t c) { return std::string(width[c], '-'); });
    for (const auto& r : t.rows) emit_row([&](size_t c) { return human_cell(t.columns[c], r[c]); });
  }
  if (!doc.verification.empty() && doc.command != "verify") {
    out << "\n";
    for (const auto& v : doc.verification)
      out << "[" << to_string(v.status) << "] " << v.suite << "/" << v.name << "  measured " << format_number(v.measured)
          << "  tolerance " << format_number(v.tolerance) << (v.detail.empty() ? "" : "  " + v.detail) << "\n";
  }
  for (const auto& n : doc.notes) out << "note: " << n << "\n";
  for (const auto& w : doc.warnings) out << "warning: " << w << "\n";
  if (doc.elapsed_ms) out << "elapsed: " << format_number(*doc.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace crown::cli

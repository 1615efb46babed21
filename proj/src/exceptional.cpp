#include "crown/exceptional.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "crown/errors.hpp"

#ifndef CROWN_DATA_DIR
#define CROWN_DATA_DIR "data"
#endif

namespace crown {

std::vector<ExceptionalCharRecord> load_exceptional_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MissingExceptionalData, "cannot open " + path);
  std::vector<ExceptionalCharRecord> out;
  std::string line;
  int lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    if (f.size() != 7)
      throw Error(ErrorKind::MissingExceptionalData, path + ":" + std::to_string(lineno) + ": expected 7 columns");
    ExceptionalCharRecord r;
    r.group = f[0];
    r.name = f[1];
    auto rv = parse_rational(f[4]);
    if (!rv) throw Error(ErrorKind::MissingExceptionalData, path + ":" + std::to_string(lineno) + ": bad value");
    try {
      r.degree = std::stoll(f[2]);
      r.b_invariant = std::stoi(f[3]);
      r.sign_b = std::stoi(f[5]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MissingExceptionalData, path + ":" + std::to_string(lineno) + ": bad integer");
    }
    r.reflection_value = rv->value;
    r.provenance = f[6];
    out.push_back(r);
  }
  return out;
}

std::string default_exceptional_path() {
  const char* env = std::getenv("CROWN_DATA_DIR");
  std::string dir = env && *env ? env : CROWN_DATA_DIR;
  return dir + "/exceptional_characters.tsv";
}

const std::vector<ExceptionalCharRecord>& exceptional_records() {
  static std::vector<ExceptionalCharRecord> records;
  static std::once_flag once;
  std::call_once(once, [] { records = load_exceptional_records(default_exceptional_path()); });
  return records;
}

const ExceptionalCharRecord& find_exceptional(const std::string& group, const std::string& name) {
  for (const auto& r : exceptional_records())
    if (r.group == group && r.name == name) return r;
  throw Error(ErrorKind::MissingExceptionalData, "no record for " + group + " " + name);
}

std::vector<ExceptionalCharRecord> exceptional_group(const std::string& group) {
  std::vector<ExceptionalCharRecord> out;
  for (const auto& r : exceptional_records())
    if (r.group == group) out.push_back(r);
  if (out.empty()) throw Error(ErrorKind::MissingExceptionalData, "no records for " + group);
  return out;
}

long long exceptional_reflection_count(const std::string& group) {
  if (group == "E6") return 36;
  if (group == "E7") return 63;
  if (group == "E8") return 120;
  throw Error(ErrorKind::MissingExceptionalData, "unknown group " + group);
}

}  // namespace crown

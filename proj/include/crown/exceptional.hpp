#pragma once

#include <string>
#include <vector>

#include "crown/rational.hpp"

namespace crown {

// One row of the shipped exceptional character table (tab separated):
//   group  name  degree  b  reflection_value  sign_b  provenance
// sign_b is the b-invariant of the sign twist, used by truncated induction.
struct ExceptionalCharRecord {
  std::string group;  // "E6", "E7"
  std::string name;   // "phi20,2"
  long long degree = 0;
  int b_invariant = 0;
  Rat reflection_value{0};
  int sign_b = 0;
  std::string provenance;
};

std::vector<ExceptionalCharRecord> load_exceptional_records(const std::string& path);

// $CROWN_DATA_DIR/exceptional_characters.tsv, falling back to the build-time data dir.
std::string default_exceptional_path();
const std::vector<ExceptionalCharRecord>& exceptional_records();
const ExceptionalCharRecord& find_exceptional(const std::string& group, const std::string& name);
std::vector<ExceptionalCharRecord> exceptional_group(const std::string& group);
long long exceptional_reflection_count(const std::string& group);

}  // namespace crown

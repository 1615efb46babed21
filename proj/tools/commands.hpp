#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crown/affine_form.hpp"
#include "report.hpp"

namespace crown::cli {

enum class Format { Human, Json, Tsv };

struct MultiplicityFlags {
  std::optional<std::string> m, m1, m2, mh;
  bool any() const { return m || m1 || m2 || mh; }
};

// Missing values default to m1 = m2 = 1, mh = 0; --m sets m1 and m2 together.
// Decimal input is accepted and reported in `warnings`; throws std::invalid_argument.
MultiplicityFunction parse_multiplicities(const MultiplicityFlags& flags, std::vector<std::string>& warnings);

ReportDocument boundary_command(const std::string& type, std::optional<int> rank, bool all);
ReportDocument exponents_command(const std::string& type, int rank, const std::optional<std::string>& eta,
                                 const MultiplicityFlags& m);
ReportDocument decay_command(const std::string& type, int rank, const MultiplicityFlags& m,
                             const std::vector<double>& periods, const std::vector<double>& constants);
ReportDocument complex_check_command(const std::optional<std::string>& type, std::optional<int> rank);
ReportDocument verify_command(const std::string& suite, unsigned seed);

std::string emit(const ReportDocument& doc, Format format);

// Parses argv, runs the command, writes the report to `out` and diagnostics to `err`.
// Returns 0 on success, 1 when a verification fails, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crown::cli

#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace crown::cli {

inline constexpr unsigned kDefaultSeed = 7;

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);         // includes "all"

// Runs one suite (or "all"); every randomized check draws from `seed`.
std::vector<VerificationResult> run_suite(const std::string& name, unsigned seed);

std::vector<VerificationResult> rootsys_suite(unsigned seed);
std::vector<VerificationResult> weylchar_suite(unsigned seed);
std::vector<VerificationResult> tables_suite(unsigned seed);
std::vector<VerificationResult> complex_suite(unsigned seed);
std::vector<VerificationResult> matrix_suite(unsigned seed);
std::vector<VerificationResult> hypergeom_suite(unsigned seed);
std::vector<VerificationResult> maass_suite(unsigned seed);
std::vector<VerificationResult> stirling_suite(unsigned seed);

}  // namespace crown::cli

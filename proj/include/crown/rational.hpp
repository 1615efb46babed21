#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace crown {

using Rat = boost::rational<long long>;
using RatVector = std::vector<Rat>;

std::string to_string(const Rat& r);
double to_double(const Rat& r);

struct ParsedRational {
  Rat value;
  bool from_decimal = false;  // "1.5" style input, converted exactly
};

// Accepts "p", "p/q", "-p/q" and finite decimals "1.25".
std::optional<ParsedRational> parse_rational(const std::string& text);

}  // namespace crown

#include "crown/affine_form.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace crown {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::optional<ParsedRational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      size_t used = 0;
      long long p = std::stoll(text.substr(0, slash), &used);
      if (used != slash) return std::nullopt;
      std::string den = text.substr(slash + 1);
      long long q = std::stoll(den, &used);
      if (used != den.size() || q == 0) return std::nullopt;
      return ParsedRational{Rat(p, q), false};
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
      size_t used = 0;
      long long p = std::stoll(text, &used);
      if (used != text.size()) return std::nullopt;
      return ParsedRational{Rat(p), false};
    }
    bool neg = text[0] == '-';
    std::string ip = text.substr(neg || text[0] == '+' ? 1 : 0, dot - (neg || text[0] == '+' ? 1 : 0));
    std::string fp = text.substr(dot + 1);
    if (fp.empty() && ip.empty()) return std::nullopt;
    if (fp.size() > 15) return std::nullopt;
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    long long scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    long long whole = ip.empty() ? 0 : std::stoll(ip);
    long long frac = fp.empty() ? 0 : std::stoll(fp);
    Rat v = Rat(whole) + Rat(frac, scale);
    if (neg) v = -v;
    return ParsedRational{v, true};
  } catch (...) {
    return std::nullopt;
  }
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  return {constant + o.constant, c_half + o.c_half, c_long + o.c_long, c_other + o.c_other};
}

AffineForm AffineForm::operator-(const AffineForm& o) const {
  return {constant - o.constant, c_half - o.c_half, c_long - o.c_long, c_other - o.c_other};
}

AffineForm AffineForm::operator*(const Rat& s) const {
  return {constant * s, c_half * s, c_long * s, c_other * s};
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  *this = *this + o;
  return *this;
}

bool AffineForm::operator==(const AffineForm& o) const {
  return constant == o.constant && c_half == o.c_half && c_long == o.c_long &&
         c_other == o.c_other;
}

Rat AffineForm::evaluate(const MultiplicityFunction& m) const {
  return constant + c_half * m.m_half + c_long * m.m_long + c_other * m.m_other;
}

namespace {

void append_term(std::ostringstream& os, const Rat& c, const char* var, bool first) {
  if (c == Rat(0)) return;
  Rat a = c;
  if (a < 0) {
    os << "-";
    a = -a;
  } else if (!first) {
    os << "+";
  }
  if (a != Rat(1)) os << to_string(a);
  os << var;
}

}  // namespace

std::string AffineForm::to_string(bool simply_laced) const {
  std::ostringstream os;
  bool first = true;
  if (constant != Rat(0)) {
    os << crown::to_string(constant);
    first = false;
  }
  const char* vl = simply_laced ? "m" : "m1";
  append_term(os, c_long, vl, first);
  if (c_long != Rat(0)) first = false;
  append_term(os, c_other, "m2", first);
  if (c_other != Rat(0)) first = false;
  append_term(os, c_half, "mh", first);
  if (c_half != Rat(0)) first = false;
  if (first) return "0";
  return os.str();
}

std::string AffineForm::to_factored_string(bool simply_laced) const {
  if (constant == Rat(0) || constant == Rat(1) || linear_part_zero()) return to_string(simply_laced);
  AffineForm inner = *this * (Rat(1) / constant);
  return crown::to_string(constant) + "(" + inner.to_string(simply_laced) + ")";
}

bool in_cone(const MultiplicityFunction& m, bool has_other, bool has_half) {
  if (m.m_long < 1) return false;
  if (has_other && m.m_other < m.m_long) return false;
  if (has_half && m.m_half < 0) return false;
  return true;
}

}  // namespace crown

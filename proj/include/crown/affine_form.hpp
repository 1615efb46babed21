#pragma once

#include "crown/rational.hpp"

#include <string>

namespace crown {

// Multiplicities keyed by W-orbit: half roots (BC only), long roots of the
// reduced system, all other roots.
struct MultiplicityFunction {
  Rat m_half{0};
  Rat m_long{1};
  Rat m_other{1};
  bool symbolic = false;

  static MultiplicityFunction uniform(Rat m) { return {Rat(0), m, m, false}; }
  static MultiplicityFunction symbolic_m() { return {Rat(0), Rat(1), Rat(1), true}; }
};

// constant + c_half*m_half + c_long*m_long + c_other*m_other
struct AffineForm {
  Rat constant{0};
  Rat c_half{0};
  Rat c_long{0};
  Rat c_other{0};

  static AffineForm constant_form(Rat c) { return {c, 0, 0, 0}; }
  static AffineForm half() { return {0, 1, 0, 0}; }
  static AffineForm long_m() { return {0, 0, 1, 0}; }
  static AffineForm other_m() { return {0, 0, 0, 1}; }

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator*(const Rat& s) const;
  AffineForm& operator+=(const AffineForm& o);
  bool operator==(const AffineForm& o) const;
  bool operator!=(const AffineForm& o) const { return !(*this == o); }

  Rat evaluate(const MultiplicityFunction& m) const;
  bool linear_part_zero() const { return c_half == Rat(0) && c_long == Rat(0) && c_other == Rat(0); }

  // simply_laced prints m_long as "m"; otherwise "m1", "m2", "mh".
  std::string to_string(bool simply_laced = false) const;
  // Factors a constant k not in {0,1}: "4(1-m1-3m2)".
  std::string to_factored_string(bool simply_laced = false) const;
};

// Cone C = {1 <= m_long <= m_other, m_half >= 0}. The m_other constraint is
// dropped when the root system has no "other" orbit, m_half when it has no half roots.
bool in_cone(const MultiplicityFunction& m, bool has_other, bool has_half);

}  // namespace crown

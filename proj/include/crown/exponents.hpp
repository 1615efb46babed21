#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crown/affine_form.hpp"
#include "crown/rootsys.hpp"
#include "crown/weylchar.hpp"

namespace crown {

struct ExponentEntry {
  CharacterLabel label;
  int b = 0;
  AffineForm c;  // sum over affine isotropy roots of (1 - chi(s)/deg) m^a
  AffineForm s;  // b - c/2
};

struct DegeneracyCondition {
  std::string description;       // "never", "m=1", "m1=1", "m1=m2", "m1=1&m2=1"
  std::vector<AffineForm> gaps;  // s_tau - s_sigma for every tau that can tie

  bool holds(const MultiplicityFunction& m) const;
};

struct ExponentReport {
  BoundaryPoint eta;
  IsotropyData isotropy;
  IsotropyPair pair;
  std::vector<ExponentEntry> J;  // sorted by s at m = 1
  CharacterLabel leading_character;
  AffineForm leading_exponent;
  DegeneracyCondition degeneracy;
  std::optional<long long> complex_check;  // s at m = 2, reduced systems only
  bool complex_ok = false;
  AffineForm lower_bound_rate;
  bool simply_laced = false;
};

ExponentReport exponent_report(const RootSystemData& rs, const BoundaryPoint& eta);

struct LeadingExponent {
  CharacterLabel label;
  AffineForm form;
  std::optional<Rat> value;  // when m was supplied
  bool outside_cone = false;
};

LeadingExponent leading_exponent(const RootSystemData& rs, const BoundaryPoint& eta,
                                 const std::optional<MultiplicityFunction>& m = std::nullopt);

std::vector<std::pair<CharacterLabel, Rat>> exponent_spectrum(const RootSystemData& rs, const BoundaryPoint& eta,
                                                              const MultiplicityFunction& m);

struct DegeneracyFlag {
  int flag = 0;
  std::string condition;
};

DegeneracyFlag degeneracy_flag(const RootSystemData& rs, const BoundaryPoint& eta, const MultiplicityFunction& m);

struct ComplexCheck {
  long long expected = 0;  // -#{alpha > 0 : alpha(eta) = 1}
  long long value = 0;     // s_eta at m = 2
  bool ok = false;
};

ComplexCheck complex_cross_check(const RootSystemData& rs, const BoundaryPoint& eta);

// 1/2 sum of m_alpha over positive roots with 0 < alpha(eta) < 1.
AffineForm lower_bound_rate(const RootSystemData& rs, const BoundaryPoint& eta);

bool in_cone(const RootSystemData& rs, const MultiplicityFunction& m);

struct DecayProfile {
  Rat dim_X{0};
  Rat r_X{0};
  Rat s_X{0};
  int d_X = 0;
  std::vector<std::string> argmax;  // boundary point labels attaining s_X
  std::vector<double> rates;        // 2 pi c_alpha / r_alpha per simple root
  double polynomial_exponent = 0;   // -(r_X/2 + s_X/4)
  double log_power = 0;             // d_X/2
  bool outside_cone = false;
  std::string normalization_note;
};

// periods and constants hold one value per simple root, or a single value for all.
DecayProfile decay_profile(const RootSystemData& rs, const MultiplicityFunction& m,
                           const std::vector<double>& periods, const std::vector<double>& constants);

}  // namespace crown

#include "crown/exponents.hpp"

#include <algorithm>
#include <cmath>

#include "crown/errors.hpp"

namespace crown {

namespace {

const MultiplicityFunction kVertex{Rat(0), Rat(1), Rat(1), false};

// Linear part of f along the cone rays: m_half, m_other, and (m_long, m_other) together.
struct RayValues {
  Rat half, other, both;
};

RayValues rays(const AffineForm& f) { return {f.c_half, f.c_other, f.c_long + f.c_other}; }

bool nonnegative_on_cone(const AffineForm& f, bool has_other, bool has_half) {
  if (f.evaluate(kVertex) < 0) return false;
  auto r = rays(f);
  if (has_half && r.half < 0) return false;
  if (has_other && r.other < 0) return false;
  return !(r.both < 0);
}

std::string zero_face(const AffineForm& f, bool has_other, bool has_half, bool simply_laced) {
  if (f.evaluate(kVertex) != Rat(0)) return "never";
  auto r = rays(f);
  std::vector<std::string> parts;
  bool fix_both = r.both != Rat(0);
  bool fix_other = has_other && r.other != Rat(0);
  if (fix_both) parts.push_back(simply_laced ? "m=1" : "m1=1");
  if (fix_other) parts.push_back(fix_both ? "m2=1" : "m1=m2");
  if (has_half && r.half != Rat(0)) parts.push_back("mh=0");
  if (parts.empty()) return "always";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += "&" + parts[i];
  return s;
}

WeylType weyl_type_of(const IsotropyData& iso) { return {iso.affine_component.letter, iso.affine_component.rank}; }

ExponentEntry entry_for(const CharacterLabel& tau, const IsotropyData& iso, const WeylType& w) {
  ExponentEntry e;
  e.label = tau;
  e.b = b_invariant(tau);
  Rat deg(dim_irrep(tau));
  for (const auto& ar : iso.affine_vanishing_roots) {
    auto d = reflection_value_for_length(tau, w, ar.long_in_affine);
    e.c += ar.multiplicity * (Rat(1) - d.value / deg);
  }
  e.s = AffineForm::constant_form(Rat(e.b)) - e.c * Rat(1, 2);
  return e;
}

}  // namespace

bool DegeneracyCondition::holds(const MultiplicityFunction& m) const {
  for (const auto& g : gaps)
    if (g.evaluate(m) == Rat(0)) return true;
  return false;
}

bool in_cone(const RootSystemData& rs, const MultiplicityFunction& m) {
  return in_cone(m, rs.has_other(), rs.has_half());
}

ExponentReport exponent_report(const RootSystemData& rs, const BoundaryPoint& eta) {
  ExponentReport rep;
  rep.eta = eta;
  rep.isotropy = isotropy_subsystem(rs, eta);
  rep.simply_laced = rs.simply_laced();
  WeylType w = weyl_type_of(rep.isotropy);
  rep.pair = {w, rep.isotropy.alpha0_node};
  for (const auto& [tau, mult] : induce_trivial(rep.pair)) rep.J.push_back(entry_for(tau, rep.isotropy, w));
  MultiplicityFunction unit{Rat(0), Rat(1), Rat(1), false};
  std::stable_sort(rep.J.begin(), rep.J.end(), [&](const auto& a, const auto& b) {
    return a.s.evaluate(unit) < b.s.evaluate(unit);
  });

  rep.leading_character = j_induce_sign(rep.pair);
  const ExponentEntry* lead = nullptr;
  for (const auto& e : rep.J)
    if (e.label == rep.leading_character) lead = &e;
  if (!lead) throw Error(ErrorKind::AmbiguousComponent, "leading character not in J for " + eta.label());
  rep.leading_exponent = lead->s;

  bool has_other = rs.has_other(), has_half = rs.has_half();
  std::vector<std::string> conditions;
  for (const auto& e : rep.J) {
    if (e.label == rep.leading_character) continue;
    AffineForm gap = e.s - lead->s;
    if (!nonnegative_on_cone(gap, has_other, has_half))
      throw Error(ErrorKind::AmbiguousComponent,
                  e.label.to_string() + " undercuts the leading character at " + eta.label());
    std::string z = zero_face(gap, has_other, has_half, rep.simply_laced);
    if (z == "never") continue;
    rep.degeneracy.gaps.push_back(gap);
    if (std::find(conditions.begin(), conditions.end(), z) == conditions.end()) conditions.push_back(z);
  }
  if (conditions.empty()) {
    rep.degeneracy.description = "never";
  } else {
    rep.degeneracy.description = conditions[0];
    for (size_t i = 1; i < conditions.size(); ++i) rep.degeneracy.description += " or " + conditions[i];
  }

  if (rs.reduced()) {
    MultiplicityFunction two{Rat(0), Rat(2), Rat(2), false};
    Rat v = rep.leading_exponent.evaluate(two);
    rep.complex_check = v.numerator() / v.denominator();
    rep.complex_ok = v.denominator() == 1 && v == Rat(-rep.isotropy.complex_level_count);
  }
  rep.lower_bound_rate = lower_bound_rate(rs, eta);
  return rep;
}

LeadingExponent leading_exponent(const RootSystemData& rs, const BoundaryPoint& eta,
                                 const std::optional<MultiplicityFunction>& m) {
  auto rep = exponent_report(rs, eta);
  LeadingExponent out;
  out.label = rep.leading_character;
  out.form = rep.leading_exponent;
  if (m) {
    out.value = out.form.evaluate(*m);
    out.outside_cone = !in_cone(rs, *m);
  }
  return out;
}

std::vector<std::pair<CharacterLabel, Rat>> exponent_spectrum(const RootSystemData& rs, const BoundaryPoint& eta,
                                                              const MultiplicityFunction& m) {
  auto rep = exponent_report(rs, eta);
  std::vector<std::pair<CharacterLabel, Rat>> out;
  for (const auto& e : rep.J) out.emplace_back(e.label, e.s.evaluate(m));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

DegeneracyFlag degeneracy_flag(const RootSystemData& rs, const BoundaryPoint& eta, const MultiplicityFunction& m) {
  if (!in_cone(rs, m)) throw Error(ErrorKind::OutsideCone, "multiplicities outside 1 <= m1 <= m2");
  auto rep = exponent_report(rs, eta);
  DegeneracyFlag f;
  f.condition = rep.degeneracy.description;
  f.flag = rep.degeneracy.holds(m) ? 1 : 0;
  return f;
}

ComplexCheck complex_cross_check(const RootSystemData& rs, const BoundaryPoint& eta) {
  if (!rs.reduced()) throw Error(ErrorKind::NonReducedSystem, rs.label() + " has half roots");
  auto rep = exponent_report(rs, eta);
  ComplexCheck c;
  c.expected = -rep.isotropy.complex_level_count;
  c.value = *rep.complex_check;
  c.ok = rep.complex_ok;
  return c;
}

AffineForm lower_bound_rate(const RootSystemData& rs, const BoundaryPoint& eta) {
  if (!eta.extremal || !is_extremal_node(rs, eta.index))
    throw Error(ErrorKind::NotExtremal, eta.label() + " is not extremal for " + rs.label());
  AffineForm sum;
  for (const auto& r : rs.positive_roots) {
    Rat v = evaluate(r.coeffs, eta.eta);
    if (Rat(0) < v && v < Rat(1)) sum += multiplicity_of(r.tag);
  }
  return sum * Rat(1, 2);
}

DecayProfile decay_profile(const RootSystemData& rs, const MultiplicityFunction& m,
                           const std::vector<double>& periods, const std::vector<double>& constants) {
  auto per_root = [&](const std::vector<double>& v, const char* what) {
    if (v.size() != 1 && static_cast<int>(v.size()) != rs.rank)
      throw Error(ErrorKind::InvalidPeriod, std::string(what) + " needs 1 or rank values");
    std::vector<double> out(rs.rank);
    for (int i = 0; i < rs.rank; ++i) out[i] = v.size() == 1 ? v[0] : v[i];
    return out;
  };
  auto r = per_root(periods, "periods");
  auto c = per_root(constants, "constants");
  DecayProfile d;
  for (int i = 0; i < rs.rank; ++i) {
    if (!(r[i] > 0) || !std::isfinite(r[i])) throw Error(ErrorKind::InvalidPeriod, "periods must be positive");
    d.rates.push_back(2 * M_PI * c[i] / r[i]);
  }
  AffineForm dim = AffineForm::constant_form(Rat(rs.rank));
  for (const auto& root : rs.positive_roots) dim += multiplicity_of(root.tag);
  d.dim_X = dim.evaluate(m);
  d.r_X = -d.dim_X + Rat(rs.rank, 2) + Rat(1, 2);
  d.outside_cone = !in_cone(rs, m);
  bool first = true;
  for (const auto& eta : extremal_points(rs)) {
    auto rep = exponent_report(rs, eta);
    Rat s = rep.leading_exponent.evaluate(m);
    int deg = rep.degeneracy.holds(m) ? 1 : 0;
    if (first || d.s_X < s) {
      d.s_X = s;
      d.d_X = deg;
      d.argmax = {eta.label()};
      first = false;
    } else if (s == d.s_X) {
      d.d_X = std::max(d.d_X, deg);
      d.argmax.push_back(eta.label());
    }
  }
  d.polynomial_exponent = -(to_double(d.r_X) / 2 + to_double(d.s_X) / 4);
  d.log_power = d.d_X / 2.0;
  d.normalization_note =
      "epsilon is the defect 1 - beta(Y/(pi/2)) of t = exp(i(1-eps)pi eta/2); its relation to the disk "
      "coordinate is a normalization choice, constants not certified";
  return d;
}

}  // namespace crown

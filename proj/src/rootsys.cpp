#include "crown/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "crown/errors.hpp"

namespace crown {

namespace {

constexpr int kMaxRank = 12;

using RatMatrix = std::vector<std::vector<Rat>>;

RatVector unit(int dim, int i, Rat v = 1) {
  RatVector e(dim, Rat(0));
  e[i] = v;
  return e;
}

RatVector diff(int dim, int i, int j) {
  RatVector e(dim, Rat(0));
  e[i] = 1;
  e[j] = -1;
  return e;
}

// Simple roots in an orthonormal basis, Bourbaki numbering.
std::vector<RatVector> simple_roots(Family f, int n) {
  std::vector<RatVector> s;
  switch (f) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1));
      break;
    case Family::C:
    case Family::BC:
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      s.push_back(unit(n, n - 1, 2));
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
      {
        RatVector v(n, Rat(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
      }
      break;
    case Family::E: {
      RatVector a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      RatVector a2(8, Rat(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a1);
      s.push_back(a2);
      s.push_back(diff(8, 1, 0));
      for (int i = 3; i < 8; ++i) s.push_back(diff(8, i - 1, i - 2));
      s.resize(n);
      break;
    }
    case Family::F: {
      s.push_back(diff(4, 1, 2));
      s.push_back(diff(4, 2, 3));
      s.push_back(unit(4, 3));
      RatVector a4(4, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      s.push_back(a4);
      break;
    }
    case Family::G: {
      s.push_back({Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(-2), Rat(1), Rat(1)});
      break;
    }
  }
  return s;
}

void check_admissible(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    case Family::BC: ok = n >= 1; break;
  }
  if (!ok) throw Error(ErrorKind::UnsupportedType, to_string(f) + "_" + std::to_string(n) + " is not admissible");
  if (n > kMaxRank) throw Error(ErrorKind::UnsupportedType, "rank above " + std::to_string(kMaxRank));
}

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat form(const RatMatrix& g, const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Rat(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

// Positive roots via root strings, integer coefficients.
std::vector<std::vector<int>> generate_roots(const IntMatrix& a) {
  int n = static_cast<int>(a.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.push_back(e);
    seen.insert(e);
  }
  for (size_t idx = 0; idx < roots.size(); ++idx) {
    auto beta = roots[idx];
    for (int i = 0; i < n; ++i) {
      int p = 0;
      auto down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
      int q = p - pairing;
      if (q > 0) {
        auto up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
  }
  return roots;
}

bool connected_without(const IntMatrix& a, int removed) {
  int n = static_cast<int>(a.size());
  std::vector<bool> seen(n, false);
  int start = removed == 0 ? 1 : 0;
  if (n <= 1) return true;
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (w != removed && !seen[w] && a[v][w] != 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n - 1;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> names{
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  auto it = names.find(s);
  if (it == names.end()) throw Error(ErrorKind::UnsupportedType, "unknown family '" + s + "'");
  return it->second;
}

const char* to_string(OrbitTag t) {
  switch (t) {
    case OrbitTag::Half: return "half";
    case OrbitTag::Long: return "long";
    case OrbitTag::Other: return "other";
  }
  return "?";
}

std::string RootSystemData::label() const { return to_string(family) + "_" + std::to_string(rank); }

bool RootSystemData::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

bool RootSystemData::has_other() const {
  for (const auto& r : positive_roots)
    if (r.tag == OrbitTag::Other) return true;
  return false;
}

int RootSystemData::reduced_count() const {
  int c = 0;
  for (const auto& r : positive_roots)
    if (r.tag != OrbitTag::Half) ++c;
  return c;
}

long long expected_positive_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return 1LL * n * (n + 1) / 2;
    case Family::B:
    case Family::C: return 1LL * n * n;
    case Family::BC: return 1LL * n * n + n;
    case Family::D: return 1LL * n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystemData build_root_system(Family family, int rank) {
  check_admissible(family, rank);
  RootSystemData rs;
  rs.family = family;
  rs.rank = rank;
  auto simple = simple_roots(family, rank);
  int n = rank;
  rs.gram.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram[i][j] = dot(simple[i], simple[j]);
  rs.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = 2 * rs.gram[i][j] / rs.gram[i][i];
      rs.cartan[i][j] = static_cast<int>(v.numerator());
    }

  auto roots = generate_roots(rs.cartan);
  std::stable_sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    int hx = 0, hy = 0;
    for (int v : x) hx += v;
    for (int v : y) hy += v;
    return hx < hy;
  });
  Rat max_norm = 0;
  for (const auto& c : roots) {
    Root r;
    for (int v : c) r.coeffs.push_back(Rat(v));
    r.norm = form(rs.gram, r.coeffs, r.coeffs);
    max_norm = std::max(max_norm, r.norm);
    rs.positive_roots.push_back(r);
  }
  for (auto& r : rs.positive_roots) r.tag = r.norm == max_norm ? OrbitTag::Long : OrbitTag::Other;
  if (family == Family::BC) {
    std::vector<Root> halves;
    for (const auto& r : rs.positive_roots) {
      if (r.tag != OrbitTag::Long) continue;
      Root h;
      for (const auto& v : r.coeffs) h.coeffs.push_back(v / 2);
      h.tag = OrbitTag::Half;
      h.norm = r.norm / 4;
      halves.push_back(h);
    }
    rs.positive_roots.insert(rs.positive_roots.end(), halves.begin(), halves.end());
  }

  const auto& theta = roots.back();
  rs.highest_root_coeffs = theta;
  RatVector th(theta.begin(), theta.end());
  Rat th_norm = form(rs.gram, th, th);
  rs.affine_cartan.assign(n + 1, std::vector<int>(n + 1, 0));
  rs.affine_cartan[0][0] = 2;
  for (int i = 0; i < n; ++i) {
    Rat ip = -form(rs.gram, th, unit(n, i));
    rs.affine_cartan[0][i + 1] = static_cast<int>((2 * ip / th_norm).numerator());
    rs.affine_cartan[i + 1][0] = static_cast<int>((2 * ip / rs.gram[i][i]).numerator());
    for (int j = 0; j < n; ++j) rs.affine_cartan[i + 1][j + 1] = rs.cartan[i][j];
  }

  if (static_cast<long long>(rs.positive_roots.size()) != expected_positive_root_count(family, rank))
    throw Error(ErrorKind::UnsupportedType, "root count mismatch for " + rs.label());
  return rs;
}

std::string BoundaryPoint::label() const {
  std::string s = "w" + std::to_string(index);
  if (denominator != 1) s += "/" + std::to_string(denominator);
  return s;
}

Rat evaluate(const RatVector& coeffs, const RatVector& eta) { return dot(coeffs, eta); }

BoundaryPoint boundary_point(const RootSystemData& rs, int j) {
  if (j < 1 || j > rs.rank) throw Error(ErrorKind::NotExtremal, "node index out of range");
  BoundaryPoint b;
  b.index = j;
  b.denominator = rs.highest_root_coeffs[j - 1];
  b.eta.assign(rs.rank, Rat(0));
  b.eta[j - 1] = Rat(1, b.denominator);
  b.extremal = is_extremal_node(rs, j);
  b.minuscule = b.extremal && b.denominator == 1;
  return b;
}

bool is_extremal_node(const RootSystemData& rs, int j) { return connected_without(rs.affine_cartan, j); }

std::vector<BoundaryPoint> extremal_points(const RootSystemData& rs) {
  std::vector<BoundaryPoint> out;
  for (int j = 1; j <= rs.rank; ++j)
    if (is_extremal_node(rs, j)) out.push_back(boundary_point(rs, j));
  return out;
}

std::vector<BoundaryPoint> minuscule_points(const RootSystemData& rs) {
  std::vector<BoundaryPoint> out;
  for (auto& b : extremal_points(rs))
    if (b.minuscule) out.push_back(b);
  return out;
}

AffineForm multiplicity_of(OrbitTag tag) {
  switch (tag) {
    case OrbitTag::Half: return AffineForm::half();
    case OrbitTag::Long: return AffineForm::long_m();
    case OrbitTag::Other: return AffineForm::other_m();
  }
  return {};
}

namespace {

std::vector<LevelCensusEntry> census_entries(const RootSystemData& rs, const BoundaryPoint& eta,
                                             int& complex_count) {
  std::map<Rat, LevelCensusEntry> levels;
  complex_count = 0;
  for (const auto& r : rs.positive_roots) {
    Rat v = evaluate(r.coeffs, eta.eta);
    auto& e = levels[v];
    e.level = v;
    ++e.count;
    e.weighted += multiplicity_of(r.tag);
    if (v == Rat(1) && r.tag != OrbitTag::Half) ++complex_count;
  }
  std::vector<LevelCensusEntry> out;
  for (auto& [k, e] : levels) out.push_back(e);
  return out;
}

bool prefer_order(const RootSystemData& rs, const BoundaryPoint& eta, const DiagramComponent& c,
                  const std::vector<int>& order) {
  int l = c.rank;
  auto pos = std::find(order.begin(), order.end(), 0) - order.begin();
  if (c.letter != 'D') return true;
  bool spin = pos >= l - 2;
  if (l == 4) {
    if (pos == 1) return true;
    if (rs.family == Family::D && eta.index == 1) return pos == 0;
    return pos == 3;
  }
  if (spin) return pos == l - 1;
  return true;
}

}  // namespace

IsotropyData isotropy_subsystem(const RootSystemData& rs, const BoundaryPoint& eta) {
  if (!eta.extremal || !is_extremal_node(rs, eta.index))
    throw Error(ErrorKind::NotExtremal, eta.label() + " is not extremal for " + rs.label());
  IsotropyData iso;
  iso.eta = eta;

  Rat max_norm = 0;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const auto& r = rs.positive_roots[i];
    if (r.tag == OrbitTag::Half) continue;
    Rat v = evaluate(r.coeffs, eta.eta);
    if (v != Rat(0) && v != Rat(1)) continue;
    AffineVanishingRoot ar;
    ar.root = static_cast<int>(i);
    ar.level = v == Rat(0) ? 0 : 1;
    ar.multiplicity = multiplicity_of(r.tag);
    if (ar.level == 0 && rs.has_half() && r.tag == OrbitTag::Long) ar.multiplicity += AffineForm::half();
    iso.affine_vanishing_roots.push_back(ar);
    if (ar.level == 0) iso.finite_part.push_back(static_cast<int>(i));
    max_norm = std::max(max_norm, r.norm);
  }
  for (auto& ar : iso.affine_vanishing_roots) ar.long_in_affine = rs.positive_roots[ar.root].norm == max_norm;
  iso.finite_positive_count = static_cast<int>(iso.finite_part.size());

  IntMatrix affine = delete_node(rs.affine_cartan, eta.index);
  std::vector<int> affine_nodes;
  for (int i = 0; i <= rs.rank; ++i)
    if (i != eta.index) affine_nodes.push_back(i);
  iso.affine_type = classify_diagram(affine);
  IntMatrix finite = delete_node(rs.cartan, eta.index - 1);
  iso.finite_type = classify_diagram(finite);

  if (!iso.affine_type.finite || iso.affine_type.components.size() != 1)
    throw Error(ErrorKind::NotExtremal, "isotropy diagram is not irreducible of finite type");
  DiagramComponent comp = iso.affine_type.components[0];
  for (auto& v : comp.order) v = affine_nodes[v];
  if (comp.rank == 2 && comp.letter == 'B' &&
      (rs.family == Family::C || rs.family == Family::BC)) {
    comp.letter = 'C';
    std::reverse(comp.order.begin(), comp.order.end());
  }
  std::vector<int> chosen = comp.order;
  for (const auto& o : automorphic_orders(comp))
    if (prefer_order(rs, eta, comp, o)) {
      chosen = o;
      break;
    }
  comp.order = chosen;
  iso.affine_component = comp;
  iso.alpha0_node = static_cast<int>(std::find(chosen.begin(), chosen.end(), 0) - chosen.begin()) + 1;
  iso.affine_type.components[0] = comp;
  iso.classified_affine_type = iso.affine_type.label();
  iso.classified_finite_type = iso.finite_type.label();
  iso.level_census = census_entries(rs, eta, iso.complex_level_count);
  return iso;
}

LevelCensus root_level_census(const RootSystemData& rs, const BoundaryPoint& eta,
                              const MultiplicityFunction& m) {
  if (!eta.extremal || !is_extremal_node(rs, eta.index))
    throw Error(ErrorKind::NotExtremal, eta.label() + " is not extremal for " + rs.label());
  LevelCensus c;
  c.levels = census_entries(rs, eta, c.complex_level_count);
  for (const auto& e : c.levels) c.weighted_values.push_back(e.weighted.evaluate(m));
  return c;
}

std::vector<RatVector> weyl_orbit(const RootSystemData& rs, const RatVector& y, size_t limit) {
  std::set<RatVector> seen{y};
  std::vector<RatVector> out{y};
  for (size_t idx = 0; idx < out.size(); ++idx) {
    for (int i = 0; i < rs.rank; ++i) {
      RatVector z = out[idx];
      Rat yi = z[i];
      if (yi == Rat(0)) continue;
      for (int j = 0; j < rs.rank; ++j) z[j] -= yi * rs.cartan[i][j];
      if (seen.insert(z).second) {
        out.push_back(z);
        if (out.size() > limit) throw Error(ErrorKind::TooLarge, "Weyl orbit exceeds limit");
      }
    }
  }
  return out;
}

OmegaVerdict omega_membership(const RootSystemData& rs, const RatVector& y) {
  Rat worst = 0;
  for (const auto& r : rs.positive_roots) {
    if (r.tag == OrbitTag::Half) continue;
    Rat v = evaluate(r.coeffs, y);
    worst = std::max(worst, v < 0 ? -v : v);
  }
  if (worst < 1) return OmegaVerdict::Interior;
  if (worst == Rat(1)) return OmegaVerdict::Boundary;
  return OmegaVerdict::Exterior;
}

}  // namespace crown

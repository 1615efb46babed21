#pragma once

#include <string>
#include <vector>

#include "crown/affine_form.hpp"
#include "crown/diagram.hpp"
#include "crown/rational.hpp"

namespace crown {

enum class Family { A, B, C, D, E, F, G, BC };

std::string to_string(Family f);
Family parse_family(const std::string& s);  // throws UnsupportedType

enum class OrbitTag { Half, Long, Other };

const char* to_string(OrbitTag t);

struct Root {
  RatVector coeffs;  // over the simple roots of the reduced system
  OrbitTag tag = OrbitTag::Long;
  Rat norm{0};       // (alpha, alpha)
};

struct RootSystemData {
  Family family = Family::A;
  int rank = 0;
  std::vector<Root> positive_roots;  // reduced roots first, then half roots
  IntMatrix cartan;                  // a_ij = 2(a_i,a_j)/(a_i,a_i)
  std::vector<std::vector<Rat>> gram;
  std::vector<int> highest_root_coeffs;
  IntMatrix affine_cartan;           // node 0 is alpha_0 = -theta

  std::string label() const;  // "BC_3"
  bool reduced() const { return family != Family::BC; }
  bool simply_laced() const;
  bool has_other() const;  // an orbit of non-long, non-half roots exists
  bool has_half() const { return family == Family::BC; }
  int reduced_count() const;  // |positive roots of the reduced system|
};

long long expected_positive_root_count(Family f, int rank);

RootSystemData build_root_system(Family family, int rank);

// eta = omega_j / k_j, stored by its values alpha_i(eta) on simple roots.
struct BoundaryPoint {
  int index = 0;  // 1-based
  int denominator = 1;
  RatVector eta;
  bool extremal = false;
  bool minuscule = false;

  std::string label() const;  // "w2/2"
};

Rat evaluate(const RatVector& coeffs, const RatVector& eta);
BoundaryPoint boundary_point(const RootSystemData& rs, int j);
bool is_extremal_node(const RootSystemData& rs, int j);
std::vector<BoundaryPoint> extremal_points(const RootSystemData& rs);
std::vector<BoundaryPoint> minuscule_points(const RootSystemData& rs);

struct AffineVanishingRoot {
  int root = 0;   // index into positive_roots
  int level = 0;  // 0: alpha itself, 1: 1 - alpha
  bool long_in_affine = true;  // root length class inside the affine isotropy system
  AffineForm multiplicity;     // m^a
};

struct LevelCensusEntry {
  Rat level;
  int count = 0;
  AffineForm weighted;  // sum of m_alpha
};

struct IsotropyData {
  BoundaryPoint eta;
  std::vector<AffineVanishingRoot> affine_vanishing_roots;
  std::vector<int> finite_part;  // root indices with alpha(eta) = 0
  DiagramClass affine_type;
  DiagramClass finite_type;
  std::string classified_affine_type;
  std::string classified_finite_type;
  // Bourbaki ordering of the affine isotropy diagram, as affine node indices
  // (0 = alpha_0); alpha0_node is the standard node played by alpha_0.
  DiagramComponent affine_component;
  int alpha0_node = 0;
  std::vector<LevelCensusEntry> level_census;
  int complex_level_count = 0;
  int finite_positive_count = 0;  // |Sigma_eta,+|
};

IsotropyData isotropy_subsystem(const RootSystemData& rs, const BoundaryPoint& eta);

struct LevelCensus {
  std::vector<LevelCensusEntry> levels;
  std::vector<Rat> weighted_values;  // evaluated at the requested m
  int complex_level_count = 0;
};

LevelCensus root_level_census(const RootSystemData& rs, const BoundaryPoint& eta,
                              const MultiplicityFunction& m);

AffineForm multiplicity_of(OrbitTag tag);

// Coweight coordinates y_i = alpha_i(Y).
std::vector<RatVector> weyl_orbit(const RootSystemData& rs, const RatVector& y, size_t limit = 100000);

enum class OmegaVerdict { Interior, Boundary, Exterior };
OmegaVerdict omega_membership(const RootSystemData& rs, const RatVector& y);

}  // namespace crown

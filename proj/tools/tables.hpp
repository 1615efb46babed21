#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crown/affine_form.hpp"
#include "crown/labels.hpp"
#include "crown/rootsys.hpp"

namespace crown::cli {

// Every irreducible type of rank <= max_rank with its conventional lower bounds
// (B, C from 2, D from 4, E 6..8, F4, G2, A and BC from 1).
std::vector<std::pair<Family, int>> all_types(int max_rank = 8);

struct Table1Row {
  Family family;
  int rank = 0;
  std::vector<std::string> extremal;   // boundary point labels, "w2/2"
  std::vector<std::string> minuscule;
};

// Published distinguished and minuscule boundary. B_2 is read as C_2 with the
// roles of the nodes exchanged.
Table1Row expected_table1(Family family, int rank);

struct Table4Row {
  Family family;
  int rank = 0;
  std::string eta;          // "w4/2"
  std::string affine_type;  // "D_4"
  CharacterLabel sigma;
  AffineForm s;
  std::string degeneracy;   // "never", "m=1", "m1=1"
  bool by_symmetry = false; // point obtained from a listed one by a diagram automorphism
  bool corrected = false;   // degeneracy cell differs from the printed one
};

// Published rows instantiated at (family, rank), one per extremal point.
std::vector<Table4Row> expected_table4(Family family, int rank);

}  // namespace crown::cli

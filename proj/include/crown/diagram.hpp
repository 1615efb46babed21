#pragma once

#include <string>
#include <vector>

namespace crown {

using IntMatrix = std::vector<std::vector<int>>;

// One irreducible finite-type piece, with its nodes listed in Bourbaki order:
// order[i] is the input node playing the role of standard node i+1.
struct DiagramComponent {
  char letter = 'A';
  int rank = 0;
  std::vector<int> order;

  std::string label() const;  // "D_8"
};

struct DiagramClass {
  bool finite = true;
  std::vector<DiagramComponent> components;

  std::string label() const;  // "A_2xA_1", "none" for the empty diagram
};

// Input is a generalized Cartan matrix; edge multiplicity a_ij*a_ji, the
// arrow points to the node with the larger |a_ij| in its row (the shorter root).
DiagramClass classify_diagram(const IntMatrix& cartan);

// All Bourbaki orderings of the same component related by diagram automorphisms
// (A: reversal, D: spin swap and triality for D_4, E_6: reversal).
std::vector<std::vector<int>> automorphic_orders(const DiagramComponent& c);

IntMatrix delete_node(const IntMatrix& m, int node);

}  // namespace crown

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crown/labels.hpp"
#include "crown/rational.hpp"

namespace crown {

// A Weyl group by Cartan type; W(A_n) is the symmetric group on n+1 letters.
struct WeylType {
  char letter = 'A';
  int rank = 1;

  std::string label() const;  // "B_4"
  bool operator==(const WeylType& o) const { return letter == o.letter && rank == o.rank; }
};

long long positive_root_count(char letter, int rank);
long long weyl_group_order(const WeylType& t);

// Parabolic W_eta inside W_eta^a: the standard generators minus one node (1-based, Bourbaki).
struct IsotropyPair {
  WeylType affine;
  int deleted_node = 1;
};

long long parabolic_positive_roots(const IsotropyPair& p);  // |Sigma_eta,+|
long long parabolic_index(const IsotropyPair& p);

long long dim_irrep(const CharacterLabel& label);
int b_invariant(const CharacterLabel& label);
CharacterLabel sign_twist(const CharacterLabel& label);
std::vector<CharacterLabel> irreducible_labels(const WeylType& t);  // classical types only

using LabelMultiset = std::vector<std::pair<CharacterLabel, int>>;

LabelMultiset induce_trivial(const IsotropyPair& p);
LabelMultiset induce_sign(const IsotropyPair& p);
CharacterLabel j_induce_sign(const IsotropyPair& p);

struct ReflectionClassDatum {
  std::string tag;  // "reflection", "sign-change", "transposition"
  bool long_roots = true;
  long long size = 0;
  Rat value{0};
};

// One datum per reflection class; for B/C the sign-change class is listed first.
std::vector<ReflectionClassDatum> reflection_values(const CharacterLabel& label, const WeylType& t);
// Value on the reflection class made of roots of the given length.
ReflectionClassDatum reflection_value_for_length(const CharacterLabel& label, const WeylType& t,
                                                 bool long_root);

// Murnaghan-Nakayama values; cycle types as lists of lengths.
long long mn_symmetric(const Partition& lambda, const std::vector<int>& cycles);
long long mn_hyperoctahedral(const Partition& lambda, const Partition& mu,
                             const std::vector<int>& positive_cycles,
                             const std::vector<int>& negative_cycles);

}  // namespace crown

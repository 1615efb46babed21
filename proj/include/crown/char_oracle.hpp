#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "crown/labels.hpp"
#include "crown/weylchar.hpp"

namespace crown {

// Signed permutation: e_i -> sign[i] * e_{image[i]}.
struct SignedPerm {
  std::vector<int> image;
  std::vector<int> sign;

  static SignedPerm identity(int n);
  SignedPerm operator*(const SignedPerm& o) const;  // (this * o)(v) = this(o(v))
  SignedPerm inverse() const;
  std::uint64_t key() const;
  int det() const;
  void cycle_type(std::vector<int>& positive, std::vector<int>& negative) const;
};

struct OracleClass {
  SignedPerm rep;
  long long size = 0;
  std::vector<int> positive_cycles;
  std::vector<int> negative_cycles;
  long long unsigned_count = 0;  // elements of the class with no sign changes
};

struct OracleCharacter {
  std::vector<long long> values;  // per class
  long long degree = 0;
  int b_invariant = 0;  // lowest degree in the coinvariant algebra
  CharacterLabel label;
};

// Brute-force character table of W(A_n) = S_{n+1}, W(B_n) = W(C_n), W(D_n)
// from class algebra constants; throws TooLarge above 50000 elements.
class CharacterOracle {
 public:
  explicit CharacterOracle(const WeylType& t, unsigned seed = 7);

  const WeylType& type() const { return type_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<OracleClass>& classes() const { return classes_; }
  const std::vector<OracleCharacter>& characters() const { return chars_; }
  const OracleCharacter& by_label(const CharacterLabel& l) const;
  int generator_class(int node) const;  // class of the simple reflection at a node (1-based)

  // Multiplicity of each character (in characters() order) in Ind_H^W of the
  // trivial (or sign) character, H generated by all nodes except `deleted_node`.
  std::vector<long long> induced(int deleted_node, bool sign) const;
  // Index in characters() of sign tensor character i.
  int sign_twist_index(int i) const;

 private:
  WeylType type_;
  int n_ = 0;  // size of the permuted set
  std::vector<SignedPerm> gens_;
  std::vector<SignedPerm> elements_;
  std::unordered_map<std::uint64_t, int> class_of_;
  std::vector<OracleClass> classes_;
  std::vector<OracleCharacter> chars_;
  std::vector<int> det_of_class_;

  void enumerate();
  void build_classes();
  void build_characters(unsigned seed);
  void compute_b_invariants();
  void assign_labels();
};

}  // namespace crown

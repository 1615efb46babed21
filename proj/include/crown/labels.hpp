#pragma once

#include <string>
#include <vector>

namespace crown {

using Partition = std::vector<int>;  // weakly decreasing, no zero parts

int size_of(const Partition& p);
Partition canonical(Partition p);  // sort descending, drop zeros
Partition transpose(const Partition& p);
int n_invariant(const Partition& p);  // sum (i-1) lambda_i
int content_sum(const Partition& p);
long long standard_tableaux(const Partition& p);  // hook length formula
std::vector<Partition> partitions_of(int n);

enum class LabelKind { Partition, Bipartition, DUnordered, DSplit, Exceptional };

struct CharacterLabel {
  LabelKind kind = LabelKind::Partition;
  Partition lambda;
  Partition mu;
  int split = 0;  // 1 for ', 2 for '' (DSplit only)
  std::string group;
  std::string name;

  static CharacterLabel partition(Partition p);
  static CharacterLabel bipartition(Partition l, Partition m);
  // Unordered D pair; the larger part (by size, then lexicographically) goes first.
  static CharacterLabel d_pair(Partition l, Partition m);
  static CharacterLabel d_split(Partition l, int prime);
  static CharacterLabel exceptional(std::string group, std::string name);

  int rank() const;  // size of the underlying (bi)partition
  std::string to_string() const;

  bool operator==(const CharacterLabel& o) const;
  bool operator!=(const CharacterLabel& o) const { return !(*this == o); }
  bool operator<(const CharacterLabel& o) const;
};

}  // namespace crown

#include <doctest.h>

#include "crown/char_oracle.hpp"
#include "crown/errors.hpp"
#include "crown/exceptional.hpp"
#include "crown/labels.hpp"
#include "crown/weylchar.hpp"

using namespace crown;

TEST_CASE("partition helpers") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(transpose({3, 1}) == Partition{2, 1, 1});
  CHECK(standard_tableaux({3, 2}) == 5);
  CHECK(n_invariant({2, 1, 1}) == 3);
  CHECK(canonical({0, 1, 3, 2}) == Partition{3, 2, 1});
}

TEST_CASE("sum of squared degrees is the group order") {
  for (WeylType t : {WeylType{'A', 4}, WeylType{'B', 3}, WeylType{'C', 4}, WeylType{'D', 4}, WeylType{'D', 5}}) {
    long long sum = 0;
    for (const auto& l : irreducible_labels(t)) sum += dim_irrep(l) * dim_irrep(l);
    CAPTURE(t.label());
    CHECK(sum == weyl_group_order(t));
  }
}

TEST_CASE("b-invariants of trivial and sign") {
  CHECK(b_invariant(CharacterLabel::partition({5})) == 0);
  CHECK(b_invariant(CharacterLabel::partition({1, 1, 1, 1, 1})) == 10);
  CHECK(b_invariant(CharacterLabel::bipartition({}, {1, 1, 1})) == 9);
  CHECK(b_invariant(CharacterLabel::d_pair({1, 1, 1, 1}, {})) == 12);
}

TEST_CASE("D b-invariants for equal-size pairs follow the coinvariant algebra") {
  // |Sigma(D_{l-i})_+| + |Sigma(C_i)_+| = (l-i)(l-i-1) + i^2 at the pair ((l-i), (i))
  CHECK(b_invariant(CharacterLabel::d_split({2}, 1)) == 2);
  CHECK(b_invariant(CharacterLabel::d_pair({3}, {1})) == 1);
  CHECK(b_invariant(CharacterLabel::d_pair({4}, {2})) == 2);
  CHECK(b_invariant(CharacterLabel::d_split({3}, 1)) == 3);
}

TEST_CASE("Murnaghan-Nakayama agrees with the brute-force table of S_5") {
  CharacterOracle oracle({'A', 4});
  for (const auto& c : oracle.characters())
    for (size_t k = 0; k < oracle.classes().size(); ++k) {
      const auto& cls = oracle.classes()[k];
      CHECK(mn_symmetric(c.label.lambda, cls.positive_cycles) == c.values[k]);
    }
}

TEST_CASE("oracle agreement for W(B_3) and W(D_4)") {
  for (WeylType t : {WeylType{'B', 3}, WeylType{'D', 4}}) {
    CharacterOracle oracle(t);
    CAPTURE(t.label());
    CHECK(oracle.order() == weyl_group_order(t));
    for (const auto& c : oracle.characters()) {
      CAPTURE(c.label.to_string());
      CHECK(dim_irrep(c.label) == c.degree);
      CHECK(b_invariant(c.label) == c.b_invariant);
    }
    auto trivial = induce_trivial({t, t.rank});
    auto want = oracle.induced(t.rank, false);
    long long total = 0;
    for (auto [label, mult] : trivial) {
      auto idx = &oracle.by_label(label) - &oracle.characters()[0];
      CHECK(want[idx] == mult);
      total += mult;
    }
    long long want_total = 0;
    for (auto m : want) want_total += m;
    CHECK(total == want_total);
  }
}

TEST_CASE("sign twist of split D characters matches the oracle") {
  for (int l : {4, 6}) {
    CharacterOracle oracle({'D', l});
    for (size_t i = 0; i < oracle.characters().size(); ++i) {
      const auto& lab = oracle.characters()[i].label;
      CAPTURE(lab.to_string());
      CHECK(sign_twist(lab) == oracle.characters()[oracle.sign_twist_index(static_cast<int>(i))].label);
    }
  }
}

TEST_CASE("reflection values") {
  // (n-1, 1) of S_n is the standard representation: value n-3 on a transposition
  auto d = reflection_value_for_length(CharacterLabel::partition({4, 1}), {'A', 4}, true);
  CHECK(d.value == Rat(2));
  CHECK(d.size == 10);
  auto b = reflection_values(CharacterLabel::bipartition({}, {3}), {'B', 3});
  REQUIRE(b.size() == 2);
  CHECK(b[0].tag == "sign-change");
}

TEST_CASE("truncated induction") {
  CHECK(j_induce_sign({{'A', 3}, 2}) == CharacterLabel::partition({2, 2}));
  CHECK(j_induce_sign({{'D', 6}, 6}) == CharacterLabel::d_split({3}, 1));
  CHECK(j_induce_sign({{'C', 3}, 3}) == CharacterLabel::bipartition({1}, {2}));
  CHECK_THROWS_AS(induce_trivial({{'B', 4}, 2}), Error);
}

TEST_CASE("exceptional records") {
  const auto& r = find_exceptional("E6", "phi20,2");
  CHECK(r.degree == 20);
  CHECK(r.b_invariant == 2);
  CHECK(find_exceptional("E7", "phi21,3").b_invariant == 3);
  CHECK_THROWS_AS(load_exceptional_records("/nonexistent/file.tsv"), Error);
  CHECK(exceptional_reflection_count("E6") == 36);
}

TEST_CASE("oracle size limit") {
  try {
    CharacterOracle big({'D', 8});
    FAIL("D_8 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

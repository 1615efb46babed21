#include <doctest.h>

#include "crown/diagram.hpp"
#include "crown/errors.hpp"
#include "crown/polytope.hpp"
#include "crown/rootsys.hpp"

using namespace crown;

namespace {

std::vector<std::string> labels(const std::vector<BoundaryPoint>& pts) {
  std::vector<std::string> v;
  for (const auto& p : pts) v.push_back(p.label());
  return v;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("positive root counts match the closed formulas") {
  CHECK(build_root_system(Family::A, 4).positive_roots.size() == 10);
  CHECK(build_root_system(Family::B, 3).positive_roots.size() == 9);
  CHECK(build_root_system(Family::C, 4).positive_roots.size() == 16);
  CHECK(build_root_system(Family::BC, 3).positive_roots.size() == 12);
  CHECK(build_root_system(Family::D, 5).positive_roots.size() == 20);
  CHECK(build_root_system(Family::E, 6).positive_roots.size() == 36);
  CHECK(build_root_system(Family::E, 7).positive_roots.size() == 63);
  CHECK(build_root_system(Family::E, 8).positive_roots.size() == 120);
  CHECK(build_root_system(Family::F, 4).positive_roots.size() == 24);
  CHECK(build_root_system(Family::G, 2).positive_roots.size() == 6);
}

TEST_CASE("highest root coefficients") {
  CHECK(build_root_system(Family::E, 8).highest_root_coeffs == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(build_root_system(Family::F, 4).highest_root_coeffs == std::vector<int>{2, 3, 4, 2});
  CHECK(build_root_system(Family::G, 2).highest_root_coeffs == std::vector<int>{3, 2});
  CHECK(build_root_system(Family::B, 4).highest_root_coeffs == std::vector<int>{1, 2, 2, 2});
  CHECK(build_root_system(Family::C, 4).highest_root_coeffs == std::vector<int>{2, 2, 2, 1});
}

TEST_CASE("distinguished and minuscule boundary, published table") {
  struct Row {
    Family f;
    int n;
    Strings ext, min;
  };
  std::vector<Row> rows = {
      {Family::A, 3, {"w1", "w2", "w3"}, {"w1", "w2", "w3"}},
      {Family::B, 3, {"w1", "w3/2"}, {"w1"}},
      {Family::B, 5, {"w1", "w5/2"}, {"w1"}},
      {Family::B, 8, {"w1", "w8/2"}, {"w1"}},
      {Family::C, 4, {"w4"}, {"w4"}},
      {Family::BC, 3, {"w3"}, {"w3"}},
      {Family::D, 4, {"w1", "w3", "w4"}, {"w1", "w3", "w4"}},
      {Family::D, 7, {"w1", "w6", "w7"}, {"w1", "w6", "w7"}},
      {Family::E, 6, {"w1", "w6"}, {"w1", "w6"}},
      {Family::E, 7, {"w2/2", "w7"}, {"w7"}},
      {Family::E, 8, {"w1/2", "w2/3"}, {}},
      {Family::F, 4, {"w4/2"}, {}},
      {Family::G, 2, {"w1/3"}, {}},
  };
  for (const auto& r : rows) {
    auto rs = build_root_system(r.f, r.n);
    CAPTURE(rs.label());
    CHECK(labels(extremal_points(rs)) == r.ext);
    CHECK(labels(minuscule_points(rs)) == r.min);
  }
}

TEST_CASE("B_2 has a single distinguished point w1") {
  auto rs = build_root_system(Family::B, 2);
  CHECK(labels(extremal_points(rs)) == Strings{"w1"});
  CHECK_FALSE(is_extremal_node(rs, 2));
}

TEST_CASE("extended Cartan matrix annihilates (1, k_1, ..., k_n)") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 5}, {Family::B, 6}, {Family::C, 3}, {Family::D, 8},
                                                         {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4},
                                                         {Family::G, 2}}) {
    auto rs = build_root_system(f, n);
    std::vector<int> k = {1};
    k.insert(k.end(), rs.highest_root_coeffs.begin(), rs.highest_root_coeffs.end());
    for (size_t j = 0; j < k.size(); ++j) {
      int sum = 0;
      for (size_t i = 0; i < k.size(); ++i) sum += rs.affine_cartan[j][i] * k[i];
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("brute-force vertices of Omega equal the Weyl orbits of the extremal points") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3},
           {Family::BC, 2}, {Family::G, 2}}) {
    auto rs = build_root_system(f, n);
    CAPTURE(rs.label());
    CHECK(omega_vertices(rs) == extremal_orbit_union(rs));
  }
}

TEST_CASE("Weyl orbit sizes and Omega membership") {
  auto a2 = build_root_system(Family::A, 2);
  CHECK(weyl_orbit(a2, {Rat(1, 3), Rat(1, 5)}).size() == 6);
  auto eta = boundary_point(a2, 1).eta;
  CHECK(omega_membership(a2, eta) == OmegaVerdict::Boundary);
  CHECK(omega_membership(a2, {Rat(0), Rat(0)}) == OmegaVerdict::Interior);
  CHECK(omega_membership(a2, {eta[0] * Rat(2), eta[1] * Rat(2)}) == OmegaVerdict::Exterior);
}

TEST_CASE("isotropy data of the distinguished points") {
  auto e7 = build_root_system(Family::E, 7);
  auto iso = isotropy_subsystem(e7, boundary_point(e7, 2));
  CHECK(iso.classified_affine_type == "A_7");
  auto e6 = build_root_system(Family::E, 6);
  CHECK(isotropy_subsystem(e6, boundary_point(e6, 1)).complex_level_count == 16);
  auto b3 = build_root_system(Family::B, 3);
  CHECK(isotropy_subsystem(b3, boundary_point(b3, 3)).classified_affine_type == "A_3");
  auto g2 = build_root_system(Family::G, 2);
  CHECK(isotropy_subsystem(g2, boundary_point(g2, 1)).classified_affine_type == "A_2");
}

TEST_CASE("diagram classification") {
  CHECK(classify_diagram(build_root_system(Family::E, 8).cartan).label() == "E_8");
  CHECK(classify_diagram(build_root_system(Family::F, 4).cartan).label() == "F_4");
  auto d5 = build_root_system(Family::D, 5);
  CHECK_FALSE(classify_diagram(d5.affine_cartan).finite);
  CHECK(classify_diagram(delete_node(d5.affine_cartan, 0)).label() == "D_5");
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(parse_family("Q"), Error);
  try {
    build_root_system(Family::E, 9);
    FAIL("E_9 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedType);
  }
  auto e8 = build_root_system(Family::E, 8);
  CHECK_FALSE(boundary_point(e8, 4).extremal);
}

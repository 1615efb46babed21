#include <doctest.h>

#include <cmath>

#include "crown/errors.hpp"
#include "crown/exponents.hpp"

using namespace crown;

namespace {

struct Row {
  Family family;
  int rank;
  int node;
  const char* affine;
  const char* sigma;
  const char* s;  // factored form
  const char* degeneracy;
};

// Published leading characters and exponents; the D_2r w2r and B_2r w2r/2 degeneracy
// cells carry the tie at m = 1 (see the tie test below).
const Row kRows[] = {
    {Family::A, 1, 1, "A_1", "1^2", "1-m", "m=1"},
    {Family::A, 4, 1, "A_4", "(4,1)", "1-5/2m", "never"},
    {Family::A, 4, 2, "A_4", "(3,2)", "2(1-2m)", "never"},
    {Family::A, 5, 2, "A_5", "(4,2)", "2(1-5/2m)", "never"},
    {Family::A, 5, 3, "A_5", "3^2", "3(1-2m)", "m=1"},
    {Family::A, 7, 4, "A_7", "4^2", "4(1-5/2m)", "m=1"},
    {Family::B, 3, 1, "B_3", "(2,1)", "1-2m1-m2", "never"},
    {Family::B, 3, 3, "A_3", "(3,1)", "1-2m1", "never"},
    {Family::B, 4, 4, "D_4", "(2,2)'", "2(1-2m1)", "m1=1"},
    {Family::B, 5, 5, "D_5", "(3,2)", "2(1-3m1)", "never"},
    {Family::B, 7, 7, "D_7", "(4,3)", "3(1-4m1)", "never"},
    {Family::BC, 1, 1, "A_1", "1^2", "1-m1", "m1=1"},
    {Family::BC, 4, 4, "C_4", "(2,2)", "2(1-m1-2m2)", "never"},
    {Family::BC, 7, 7, "C_7", "(3,4)", "4(1-m1-3m2)", "m1=1"},
    {Family::D, 5, 1, "D_5", "((4,1),-)", "2(1-5/2m)", "m=1"},
    {Family::D, 6, 6, "D_6", "(3,3)'", "3(1-3m)", "m=1"},
    {Family::D, 7, 7, "D_7", "(4,3)", "3(1-4m)", "never"},
    {Family::E, 6, 1, "E_6", "phi20,2", "2(1-9/2m)", "never"},
    {Family::E, 7, 7, "E_7", "phi21,3", "3(1-5m)", "m=1"},
    {Family::E, 7, 2, "A_7", "(7,1)", "1-4m", "never"},
    {Family::E, 8, 1, "D_8", "((7,1),-)", "2(1-4m)", "m=1"},
    {Family::E, 8, 2, "A_8", "(8,1)", "1-9/2m", "never"},
    {Family::F, 4, 4, "B_4", "(3,1)", "1-3m1-m2", "never"},
    {Family::G, 2, 1, "A_2", "(2,1)", "1-3/2m1", "never"},
};

MultiplicityFunction m(Rat m1, Rat m2, Rat mh = Rat(0)) { return {mh, m1, m2, false}; }

}  // namespace

TEST_CASE("published leading characters, exponents and degeneracy") {
  for (const auto& r : kRows) {
    auto rs = build_root_system(r.family, r.rank);
    auto eta = boundary_point(rs, r.node);
    auto rep = exponent_report(rs, eta);
    CAPTURE(rs.label());
    CAPTURE(eta.label());
    CHECK(rep.isotropy.classified_affine_type == r.affine);
    CHECK(rep.leading_character.to_string() == r.sigma);
    CHECK(rep.leading_exponent.to_factored_string(rs.simply_laced()) == r.s);
    CHECK(rep.degeneracy.description == r.degeneracy);
  }
}

TEST_CASE("exponent formulas as affine forms") {
  // BC_{2r+1}: (r+1)(1 - r m2 - m1)
  for (int r = 1; r <= 3; ++r) {
    auto rs = build_root_system(Family::BC, 2 * r + 1);
    auto s = leading_exponent(rs, boundary_point(rs, 2 * r + 1)).form;
    AffineForm want{Rat(r + 1), Rat(0), Rat(-(r + 1)), Rat(-(r + 1) * r)};
    CHECK(s == want);
  }
  // D_l w1: 2 - l m
  for (int l = 4; l <= 8; ++l) {
    auto rs = build_root_system(Family::D, l);
    CHECK(leading_exponent(rs, boundary_point(rs, 1)).form == AffineForm{Rat(2), Rat(0), Rat(-l), Rat(0)});
  }
}

TEST_CASE("D_2r and B_2r: a second character ties with the leading one at m = 1") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::D, 4}, {Family::D, 6}, {Family::B, 4}}) {
    auto rs = build_root_system(f, n);
    int r = n / 2;
    auto rep = exponent_report(rs, boundary_point(rs, n));
    auto other = CharacterLabel::d_pair({r + 1}, {r - 1});
    const ExponentEntry* e = nullptr;
    for (const auto& x : rep.J)
      if (x.label == other) e = &x;
    REQUIRE(e != nullptr);
    auto one = m(Rat(1), Rat(1));
    CHECK(e->s.evaluate(one) == Rat(-r * (r - 1)));
    CHECK(rep.leading_exponent.evaluate(one) == Rat(-r * (r - 1)));
    auto two = m(Rat(2), Rat(2));
    CHECK(rep.leading_exponent.evaluate(two) < e->s.evaluate(two));
  }
}

TEST_CASE("leading exponent at given multiplicities") {
  auto g2 = build_root_system(Family::G, 2);
  auto le = leading_exponent(g2, boundary_point(g2, 1), m(Rat(1), Rat(1)));
  REQUIRE(le.value.has_value());
  CHECK(*le.value == Rat(-1, 2));
  CHECK_FALSE(le.outside_cone);
  auto out = leading_exponent(g2, boundary_point(g2, 1), m(Rat(2), Rat(1)));
  CHECK(out.outside_cone);
}

TEST_CASE("spectrum starts with the leading exponent") {
  auto rs = build_root_system(Family::D, 6);
  auto eta = boundary_point(rs, 6);
  auto mm = m(Rat(3, 2), Rat(3, 2));
  auto spec = exponent_spectrum(rs, eta, mm);
  REQUIRE(!spec.empty());
  CHECK(spec.front().second == leading_exponent(rs, eta).form.evaluate(mm));
}

TEST_CASE("degeneracy flag") {
  auto e7 = build_root_system(Family::E, 7);
  CHECK(degeneracy_flag(e7, boundary_point(e7, 7), m(Rat(1), Rat(1))).flag == 1);
  CHECK(degeneracy_flag(e7, boundary_point(e7, 7), m(Rat(2), Rat(2))).flag == 0);
  try {
    degeneracy_flag(e7, boundary_point(e7, 7), m(Rat(1, 2), Rat(1, 2)));
    FAIL("outside cone accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutsideCone);
  }
}

TEST_CASE("complex case: s at m = 2 counts the level-one roots") {
  auto e6 = build_root_system(Family::E, 6);
  auto c6 = complex_cross_check(e6, boundary_point(e6, 1));
  CHECK(c6.value == -16);
  CHECK(c6.ok);
  auto e7 = build_root_system(Family::E, 7);
  CHECK(complex_cross_check(e7, boundary_point(e7, 7)).value == -27);
  auto bc = build_root_system(Family::BC, 3);
  CHECK_THROWS_AS(complex_cross_check(bc, boundary_point(bc, 3)), Error);
}

TEST_CASE("lower bound rate") {
  auto b3 = build_root_system(Family::B, 3);
  CHECK(lower_bound_rate(b3, boundary_point(b3, 3)) == AffineForm{Rat(0), Rat(0), Rat(0), Rat(3, 2)});
  auto a3 = build_root_system(Family::A, 3);
  CHECK(lower_bound_rate(a3, boundary_point(a3, 2)).linear_part_zero());
  auto e8 = build_root_system(Family::E, 8);
  try {
    lower_bound_rate(e8, boundary_point(e8, 4));
    FAIL("non-extremal point accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotExtremal);
  }
}

TEST_CASE("decay profile") {
  auto a1 = build_root_system(Family::A, 1);
  auto d = decay_profile(a1, m(Rat(1), Rat(1)), {1.0}, {1.0});
  CHECK(d.dim_X == Rat(2));
  CHECK(d.s_X == Rat(0));
  CHECK(d.d_X == 1);
  CHECK(d.rates.size() == 1);
  CHECK(d.rates[0] == doctest::Approx(2 * M_PI));
  CHECK_THROWS_AS(decay_profile(a1, m(Rat(1), Rat(1)), {-1.0}, {1.0}), Error);
  auto b3 = build_root_system(Family::B, 3);
  CHECK_THROWS_AS(decay_profile(b3, m(Rat(1), Rat(1)), {1.0, 2.0}, {1.0}), Error);
}

#include <doctest.h>

#include <cmath>

#include "crown/errors.hpp"
#include "crown/models.hpp"

using namespace crown;

TEST_CASE("SO(1,2) orbit identity") {
  auto c = so12_identity_check(M_PI / 6);
  CHECK(c.tanh_r == doctest::Approx(1.0 / 7));
  CHECK(c.deviation < 1e-10);
  for (int k = 0; k < 100; ++k) {
    double t = -M_PI / 4 + (k + 0.5) * (M_PI / 2) / 100;
    CHECK(so12_identity_check(t).deviation < 1e-10);
  }
  CHECK_THROWS_AS(so12_identity_check(M_PI / 2), Error);
}

TEST_CASE("boundary map") {
  auto b0 = boundary_map(0, 1);
  CHECK((b0 - so12_z1()).norm() < 1e-15);
  auto b2 = boundary_map(2, 1);
  CHECK(std::abs(b2(0) - cplx(2)) < 1e-10);
  CHECK(std::abs(b2(1) - cplx(2)) < 1e-10);
  CHECK(std::abs(b2(2) - cplx(0, 1)) < 1e-10);
  for (double s = 0; s <= 10; s += 0.25) {
    CHECK(boundary_map_deviation(s, 1) < 1e-10);
    CHECK(boundary_map_deviation(s, -1) < 1e-10);
  }
}

TEST_CASE("horocycle witnesses") {
  CVector z(3);
  z << 0, cplx(0, 0.4), 2.0;
  auto xi = horocycle_witness(z);
  REQUIRE(xi.has_value());
  // (1/x2, 0, -1/x2) is a witness for (0, i y1, x2)
  CHECK(std::abs(lorentz_form(z, xi->cast<cplx>()) - 1.0) < 1e-12);
  CHECK(std::abs((*xi)(0) * (*xi)(0) - (*xi)(1) * (*xi)(1) - (*xi)(2) * (*xi)(2)) < 1e-12);
  CVector imaginary(3);
  imaginary << cplx(0, 0.8), cplx(0, 0.3), cplx(0, -0.2);
  CHECK_FALSE(horocycle_witness(imaginary).has_value());
  auto suite = so12_boundary_suite(3, 50);
  for (int f = 0; f < 3; ++f) {
    CHECK(suite.witness_failures[f] == 0);
    CHECK(suite.witness_max_residual[f] < 1e-9);
  }
  CHECK(suite.imaginary_witnesses == 0);
}

TEST_CASE("form preservation") {
  CHECK(so1n_form_deviation(2, 20, 1) < 1e-10);
  CHECK(so1n_form_deviation(4, 20, 1) < 1e-10);
  CHECK(sp_form_deviation(2, 20, 1) < 1e-10);
  auto c = sp_orbit_identity_check({0.2, -0.6});
  CHECK(c.invariant_deviation < 1e-10);
  CHECK(c.block_deviation < 1e-10);
}

TEST_CASE("region predicates") {
  auto in = crown_region_check("SO(1,3)", {1.0, 0.5});
  CHECK(in.inside);
  CHECK(in.consistent);
  auto out = crown_region_check("SO(1,3)", {3.5, 0.0});
  CHECK_FALSE(out.inside);
  CHECK(out.zero_found);
  auto su = crown_region_check("SU(2,1)", {0.5, 0.0, 0.4});
  CHECK(su.inside);
  CHECK(su.consistent);
  auto sp = crown_region_check("Sp(2)", {0.9, 0, 0, -0.5});
  CHECK(sp.inside);
  CHECK_FALSE(crown_region_check("Sp(2)", {1.1, 0, 0, -0.5}).inside);
  try {
    crown_region_check("SL(3)", {0});
    FAIL("unknown model accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedModel);
  }
}

TEST_CASE("Sp flip at operator norm one, SU(2,1) grid") {
  RMatrix z(2, 2);
  z << 1, 0, 0, -0.5;
  double flip = sp_flip_location(z, 0.9005, 1e-3, 200);
  CHECK(std::abs(flip - 1) <= 1e-3);
  auto g = su21_grid_agreement(20, 5);
  CHECK(g.disagreements == 0);
  CHECK(g.points == 400);
}

TEST_CASE("convexity of the Iwasawa projection") {
  auto r2 = convexity_check(2, 200, 9);
  CHECK(r2.violations == 0);
  CHECK(r2.chart_failures == 0);
  auto r3 = convexity_check(3, 200, 9);
  CHECK(r3.violations == 0);
  CHECK(r3.max_excess < 1e-8);
  RVector v(3), y(3);
  y << 0.3, 0.0, -0.3;
  v << 0.1, 0.0, -0.1;
  CHECK(permutohedron_excess(v, y) <= 0);
  v << 0.4, -0.1, -0.3;
  CHECK(permutohedron_excess(v, y) > 0);
}

TEST_CASE("Iwasawa chart boundary") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 0) = 0;
  m(0, 1) = m(1, 0) = 1;
  CHECK_THROWS_AS(iwasawa_a_part(m), Error);
}

TEST_CASE("SL(n) phase bound") {
  RVector k(3);
  k << 1, 0, 0;
  auto zero = sln_phase(k, 0);
  CHECK(zero.phase == 0);
  CHECK(zero.bound == 0);
  auto r = sln_phase_bound(3, 0.5, 10000, 4);
  CHECK(r.bound == doctest::Approx(0.5 * std::atan(4.0 / 3)));
  CHECK(r.violations == 0);
  CHECK(r.max_phase <= r.extremal_phase + 1e-12);
  CHECK(r.gap > 0);
}

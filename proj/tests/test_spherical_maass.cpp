#include <doctest.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_legendre.h>

#include <cmath>

#include "crown/errors.hpp"
#include "crown/maass.hpp"
#include "crown/spherical.hpp"

using namespace crown;

TEST_CASE("spherical function against the conical function") {
  // phi_lambda(y) = P_{-1/2 + i lambda}(cos y)
  for (double lam : {0.0, 0.5, 1.0, 2.0, 3.0})
    for (double y : {0.1, 0.3, 0.7, 1.2}) {
      CAPTURE(lam);
      CAPTURE(y);
      CHECK(std::abs(spherical_so12(lam, y) - gsl_sf_conicalP_0(lam, std::cos(y))) < 1e-9);
    }
  CHECK(std::abs(spherical_so12(2.7, 0) - 1.0) < 1e-12);
  CHECK_THROWS_AS(spherical_so12(1.0, M_PI / 2), Error);
}

TEST_CASE("spherical function is even in lambda") {
  for (double y : {0.3, 0.9}) CHECK(std::abs(spherical_so12(1.7, y) - spherical_so12(-1.7, y)) < 1e-9);
}

TEST_CASE("doubling formula") {
  for (double lam : {0.0, 0.5, 1.0, 2.0, 3.0})
    for (double y : {0.3, 0.7}) CHECK(doubling_check(lam, y).relative < 1e-6);
  CHECK_THROWS_AS(doubling_check(1.0, 0.8), Error);
}

TEST_CASE("K-Bessel by quadrature") {
  for (double nu : {0.0, 0.5, 1.0, 2.3, 7.0})
    for (double y : {0.1, 1.0, 5.0, 30.0}) {
      CAPTURE(nu);
      CAPTURE(y);
      CHECK(std::abs(bessel_k(nu, y).real() / gsl_sf_bessel_Knu(nu, y) - 1) < 1e-10);
      CHECK(std::abs(bessel_k_scaled(nu, y).real() / gsl_sf_bessel_Knu_scaled(nu, y) - 1) < 1e-10);
    }
  for (double y : {0.5, 3.0, 20.0})
    CHECK(std::abs(bessel_k(0.5, y).real() / (std::sqrt(M_PI / (2 * y)) * std::exp(-y)) - 1) < 1e-8);
  // purely imaginary order: real valued
  CHECK(std::abs(bessel_k(cplx(0, 9.5337), 4 * M_PI).imag()) < 1e-12);
  CHECK(std::abs(bessel_k_asymptotic(0.5, 2.0, 3) - std::sqrt(M_PI / 4) * std::exp(-2.0)) < 1e-15);
}

TEST_CASE("K-Bessel envelope bounds the quadrature") {
  for (double nu : {0.0, 0.4, 1.0, 3.0})
    for (double x : {4.0, 12.0, 60.0}) {
      double k = bessel_k(nu, x).real() * std::sqrt(2 * x / M_PI) * std::exp(x);
      CHECK(k <= bessel_k_envelope(nu, x) * (1 + 1e-12));
    }
  CHECK(std::isinf(bessel_k_envelope(5.0, 1.0)));
}

TEST_CASE("Maass decay demo") {
  std::vector<double> ys;
  for (int i = 0; i <= 16; ++i) ys.push_back(2 + 0.5 * i);
  SUBCASE("single term at y = 10 stays under the K prefactor") {
    MaassCoefficients single{"single", [](int n) { return n == 1 ? cplx(1) : cplx(0); }, 1};
    auto r = maass_decay_demo(single, cplx(0, 9.5337), {10.0});
    double y = 10, pref = std::sqrt(y) * std::sqrt(M_PI / (2 * 2 * M_PI * y)) * std::exp(-2 * M_PI * y);
    CHECK(r.points[0].abs_phi <= 1.1 * pref);
  }
  SUBCASE("Hecke-bounded coefficients respect the decreasing majorant") {
    for (auto c : {MaassCoefficients::unit(), MaassCoefficients::hecke_extremal(), MaassCoefficients::random(5)}) {
      auto r = maass_decay_demo(c, cplx(0, 9.5337), ys);
      CHECK(r.majorant_holds);
      CHECK(std::isfinite(r.sup_scaled));
      for (const auto& p : r.points) CHECK(p.tail_bound < 1e-12);
    }
  }
  SUBCASE("real order above one half decreases from y = 2") {
    auto r = maass_decay_demo(MaassCoefficients::hecke_extremal(), 1.0, ys);
    CHECK(r.attained_at_grid_min);
    CHECK(r.argmax_y == 2);
  }
  SUBCASE("cusp form order: the weighted value grows on [2, 10]") {
    auto r = maass_decay_demo(MaassCoefficients::unit(), cplx(0, 9.5337), ys);
    CHECK(r.argmax_y == 10);
    CHECK(r.points.front().scaled == doctest::Approx(0.02583).epsilon(1e-3));
  }
  SUBCASE("truncation errors") {
    CHECK_THROWS_AS(maass_decay_demo(MaassCoefficients::unit(), 1.0, {1.5}), Error);
    CHECK_THROWS_AS(maass_decay_demo(MaassCoefficients::unit(), 1.0, {2.0}, 1), Error);
  }
}

TEST_CASE("Mellin transform Gamma quotient and its Stirling forms") {
  // alpha = beta = gamma = 0 on the diagonal: 1/4 pi^{-2s} Gamma(s/2)^6 / Gamma(s)
  double s = 10;
  cplx direct = 0.25 * std::pow(M_PI, -2 * s) * std::pow(gamma_fn(s / 2), 6) / gamma_fn(s);
  CHECK(std::abs(mellin_rhs(s, s, 0, 0) / direct - 1.0) < 1e-12);

  // independent evaluation with std::lgamma on the diagonal, alpha = beta = 0
  auto oracle_log_ratio = [](double s) {
    double rhs = std::log(0.25) - 2 * s * std::log(M_PI) + 6 * std::lgamma(s / 2) - std::lgamma(s);
    double form = std::log(2.0) - 2 * s * std::log(M_PI) + 2.5 * std::log(2 * M_PI) - 3 * s * std::log(2.0) +
                  (2 * s - 2.5) * std::log(s) - 2 * s;
    return rhs - form;
  };
  double prev = INFINITY;
  for (double s : {20.0, 40.0, 80.0, 160.0}) {
    auto d = stirling_diagonal(s);
    CHECK(std::abs(std::log(std::abs(d.corrected)) - oracle_log_ratio(s)) < 1e-10);
    double dev = std::abs(std::abs(d.corrected) - 1);
    CHECK(dev < prev);
    CHECK(dev < 1.0 / s);
    prev = dev;
    // the printed form misses by a factor growing like s^2
    CHECK(std::abs(d.printed) < 0.05);
  }
  CHECK(std::abs(stirling_diagonal(40).corrected) == doctest::Approx(1.02318).epsilon(1e-5));

  cplx alpha(0, 0.3), beta(0, -0.1);
  CHECK(std::abs(stirling_axis(40, alpha, beta)) == doctest::Approx(1.00746).epsilon(1e-5));
  CHECK(std::abs(stirling_axis(80, alpha, beta)) == doctest::Approx(1.00373).epsilon(1e-5));
  auto all = mellin_stirling_check(40, alpha, beta);
  CHECK(std::abs(all.a2 - stirling_axis(40, alpha, beta)) < 1e-15);

  try {
    stirling_axis(40, 0, 0);
    FAIL("pole accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleProximity);
  }
}

#include <doctest.h>
#include <gsl/gsl_sf_hyperg.h>

#include <cmath>

#include "crown/errors.hpp"
#include "crown/hypergeom.hpp"
#include "crown/quadrature.hpp"
#include "crown/special.hpp"

using namespace crown;

namespace {

ErrorKind kind_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::UnsupportedType;
}

}  // namespace

TEST_CASE("quadrature") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) == doctest::Approx(2).epsilon(1e-12));
  QuadratureSpec s31;
  s31.rule = "gauss-kronrod-31";
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -6, 6, s31) == doctest::Approx(std::sqrt(M_PI)));
  auto c = integrate_complex([](double x) { return std::exp(cplx(0, x)); }, 0, M_PI / 2);
  CHECK(std::abs(c - cplx(1, 1)) < 1e-12);
  CHECK(kind_of([] { integrate([](double) { return 1.0; }, 0, INFINITY); }) == ErrorKind::QuadratureFailure);
  QuadratureSpec shallow;
  shallow.max_depth = 1;
  CHECK(kind_of([&] { integrate([](double x) { return std::sin(1 / x); }, 1e-6, 1, shallow); }) ==
        ErrorKind::QuadratureFailure);
  QuadratureSpec bad;
  bad.rule = "simpson";
  CHECK(kind_of([&] { integrate([](double) { return 1.0; }, 0, 1, bad); }) == ErrorKind::QuadratureFailure);
}

TEST_CASE("log gamma, gamma, digamma") {
  for (double x : {0.3, 1.0, 2.5, 10.0, 40.0}) CHECK(log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  CHECK(std::abs(gamma_fn(5.0) - 24.0) < 1e-12);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  cplx z(0.3, 1.7);
  CHECK(std::abs(gamma_fn(z) * gamma_fn(1.0 - z) - M_PI / std::sin(M_PI * z)) < 1e-12);
  CHECK(std::abs(digamma(1.0) + 0.57721566490153286) < 1e-14);
  CHECK(rgamma(-3.0) == cplx(0));
  CHECK(kind_of([] { log_gamma(-2.0); }) == ErrorKind::PoleProximity);
  CHECK(pole_distance(cplx(-2.1, 0)) == doctest::Approx(0.1));
  CHECK(is_nonpositive_integer(-4.0));
}

TEST_CASE("2F1 against GSL for real parameters") {
  struct P {
    double a, b, c, x;
  };
  for (auto p : {P{0.5, 1.5, 2.5, 0.3}, P{1.2, -0.7, 3.1, -0.6}, P{0.75, 1.25, 1.5, 0.9}, P{0.5, 0.5, 1.0, 0.99},
                 P{1.0, 1.5, 2.5, 0.95}, P{0.3, 0.8, 2.1, -0.95}, P{2.0, 3.0, 5.5, 0.97}}) {
    CAPTURE(p.x);
    double want = gsl_sf_hyperg_2F1(p.a, p.b, p.c, p.x);
    cplx got = hyp2f1(p.a, p.b, p.c, p.x);
    CHECK(std::abs(got.real() / want - 1) < 1e-10);
    CHECK(std::abs(got.imag()) < 1e-12);
  }
}

TEST_CASE("2F1 closed forms in the complex plane") {
  // F(1,1;2;z) = -log(1-z)/z
  for (cplx z : {cplx(0.3, 0.4), cplx(0.8, -0.5), cplx(-0.7, 0.2), cplx(0.95, 0.1)}) {
    CAPTURE(z);
    CHECK(std::abs(hyp2f1(1, 1, 2, z) + std::log(1.0 - z) / z) < 1e-11);
  }
  // F(a,b;b;z) = (1-z)^{-a}
  cplx z(0.5, 0.6);
  CHECK(std::abs(hyp2f1(0.7, 1.3, 1.3, z) - std::pow(1.0 - z, -0.7)) < 1e-11);
  CHECK(kind_of([] { hyp2f1(0.5, 0.5, 1.5, 2.0); }) == ErrorKind::ConnectionFormulaFailure);
}

TEST_CASE("2F1 near one, logarithmic case") {
  // F(1/2, 1/2; 1; 1 - w) = (2/pi) K(sqrt(1-w)) ~ (1/pi) log(16/w) as w -> 0
  double w = 1e-10;
  double approx = std::log(16 / w) / M_PI;
  CHECK(hyp2f1_near_one(0.5, 0.5, 1.0, w).real() == doctest::Approx(approx).epsilon(1e-8));
}

TEST_CASE("rank one parameters") {
  auto p = rank_one_parameters(0.5, 2, 3);
  CHECK(std::abs(p.a - cplx(0.5 + 0.5 + 1.5)) < 1e-15);
  CHECK(std::abs(p.b - cplx(-0.5 + 0.5 + 1.5)) < 1e-15);
  CHECK(p.c == doctest::Approx(3));
  CHECK(std::abs(rank_one_phi(0.3, 0, 2, 1.0) - 1.0) < 1e-12);  // z = 0
  // both branches agree with the direct evaluation
  auto q = rank_one_parameters(0.3, 1, 2);
  for (double eps : {0.05, 0.4, 0.8}) {
    double z = std::pow(std::cos(M_PI * eps / 2), 2);
    CHECK(std::abs(rank_one_phi(0.3, 1, 2, eps) - hyp2f1(q.a, q.b, q.c, z)) < 1e-10);
  }
}

TEST_CASE("exponent fits") {
  SUBCASE("q = 3, real lambda: slope -2") {
    auto f = exponent_fit(0, 3, 0.7);
    CHECK(std::abs(f.exponent_estimate + 2) < 0.05);
    CHECK(f.log_degree_estimate == 0);
    CHECK(f.expected_exponent == doctest::Approx(-2));
  }
  SUBCASE("q = 2 and q = 5") {
    CHECK(std::abs(exponent_fit(0, 2, 1.1).exponent_estimate + 1) < 0.05);
    CHECK(std::abs(exponent_fit(0, 5, 0.2).exponent_estimate + 4) < 0.05);
  }
  SUBCASE("q = 1: logarithmic leading term") {
    auto f = exponent_fit(0, 1, 0.7);
    CHECK(f.log_degree_estimate == 1);
    CHECK(std::abs(f.exponent_estimate) < 0.05);
    auto g = exponent_fit(2, 1, cplx(0, 1.3));
    CHECK(g.log_degree_estimate == 1);
  }
  SUBCASE("terminating series stays bounded") {
    auto f = exponent_fit(0, 3, -1.5);
    CHECK(f.max_abs <= 1.0 + 1e-12);
    CHECK(f.exponent_estimate > -0.05);
  }
  SUBCASE("stable under grid refinement") {
    FitGrid fine;
    fine.points = 81;
    for (int q : {2, 3, 5})
      CHECK(std::abs(exponent_fit(0, q, 0.7).exponent_estimate - exponent_fit(0, q, 0.7, fine).exponent_estimate) <
            0.01);
  }
}

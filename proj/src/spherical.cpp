#include "crown/spherical.hpp"

#include <cmath>

#include "crown/errors.hpp"

namespace crown {

namespace {

const cplx I(0, 1);

cplx kernel(double y, double theta) { return cplx(std::cos(y), -std::sin(y) * std::cos(theta)); }

}  // namespace

cplx spherical_so12(cplx lambda, double y, const QuadratureSpec& spec) {
  if (!(std::abs(y) < M_PI / 2)) throw Error(ErrorKind::ChartBoundary, "spherical function needs |y| < pi/2");
  cplx e = -0.5 - I * lambda;
  // symmetric in theta -> 2pi - theta
  auto f = [&](double th) { return std::pow(kernel(y, th), e); };
  return integrate_complex(f, 0, M_PI, spec) / M_PI;
}

DoublingCheck doubling_check(double lambda, double y, const QuadratureSpec& spec) {
  if (!(std::abs(y) < M_PI / 4)) throw Error(ErrorKind::ChartBoundary, "doubling needs |y| < pi/4");
  cplx e = -1.0 - 2.0 * I * lambda;
  auto f = [&](double th) { return std::abs(std::pow(kernel(y, th), e)); };
  DoublingCheck out;
  out.lhs = integrate(f, 0, M_PI, spec) / M_PI;
  out.rhs = spherical_so12(lambda, 2 * y, spec);
  out.relative = std::abs(out.lhs - out.rhs) / std::abs(out.rhs);
  return out;
}

}  // namespace crown

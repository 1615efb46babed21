#pragma once

#include "crown/quadrature.hpp"
#include "crown/special.hpp"

namespace crown {

// phi_lambda at exp(i y e1).x0 in the SO(1,2) model:
//   (1/2pi) int_0^{2pi} (cos y - i sin y cos theta)^(-1/2 - i lambda) dtheta.
// The chart needs |y| < pi/2 (ChartBoundary otherwise).
cplx spherical_so12(cplx lambda, double y, const QuadratureSpec& spec = {});

struct DoublingCheck {
  double lhs = 0;        // (1/2pi) int |(cos y - i sin y cos theta)^(-1 - 2i lambda)| dtheta
  cplx rhs;              // phi_lambda at angle 2y
  double relative = 0;   // |lhs - rhs| / |rhs|
};

// Needs |y| < pi/4 so that 2y stays in the chart.
DoublingCheck doubling_check(double lambda, double y, const QuadratureSpec& spec = {});

}  // namespace crown

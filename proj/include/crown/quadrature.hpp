#pragma once

#include <complex>
#include <functional>
#include <string>

#include "crown/tolerances.hpp"

namespace crown {

// Adaptive Gauss-Kronrod on a finite interval (bisection until the error
// estimate meets the tolerance or max_depth levels are used up).
struct QuadratureSpec {
  std::string rule = "gauss-kronrod-15";  // or "gauss-kronrod-31"
  double abs_tol = tol::kQuadratureAbs;
  double rel_tol = tol::kQuadratureRel;
  unsigned max_depth = tol::kQuadratureDepth;
};

struct QuadratureEstimate {
  double error = 0;
  double l1 = 0;  // integral of |f|
};

// Throws QuadratureFailure when the error estimate exceeds max(abs_tol, rel_tol * l1).
double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec = {},
                 QuadratureEstimate* estimate = nullptr);
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                       const QuadratureSpec& spec = {}, QuadratureEstimate* estimate = nullptr);

}  // namespace crown

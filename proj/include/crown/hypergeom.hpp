#pragma once

#include <vector>

#include "crown/special.hpp"

namespace crown {

// Gauss hypergeometric function. Power series for |z| <= 0.75, the z -> 1-z
// connection formula (logarithmic variant when c-a-b is an integer) for
// |1-z| <= 0.75, the Pfaff transformation for |z/(z-1)| <= 0.9, and the
// plain polynomial when a or b is a non-positive integer. Points near
// exp(+-i pi/3) fall outside every region and throw ConnectionFormulaFailure.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

// F(a, b; c; 1 - w) for small w, without forming z = 1 - w.
cplx hyp2f1_near_one(cplx a, cplx b, cplx c, cplx w);

struct RankOneParameters {
  cplx a;
  cplx b;
  double c = 0;
};

// a = lambda + p/4 + q/2, b = -lambda + p/4 + q/2, c = (1 + p + q)/2, with
// q = dim g^alpha and p = dim g^(alpha/2).
RankOneParameters rank_one_parameters(cplx lambda, double p, double q);

// F(a, b; c; z) at z = cos^2(pi eps / 2), i.e. 1 - z = sin^2(pi eps / 2).
cplx rank_one_phi(cplx lambda, double p, double q, double eps);

struct FitGrid {
  double eps_max = 1e-2;
  double eps_min = 1e-6;
  int points = 41;

  std::vector<double> values() const;  // geometric grid from eps_max down to eps_min
};

struct FitResult {
  double exponent_estimate = 0;
  int log_degree_estimate = 0;  // 1 when |phi| ~ eps^s (A + B |log eps|) fits and a pure power does not
  double residual = 0;          // of the selected model
  double power_residual = 0;    // rms of log|phi| - (s log eps + c)
  double log_residual = 0;      // relative rms of the eps^s (A + B|log eps|) model
  double log_share = 0;         // B|log eps_min| / (|A| + B|log eps_min|)
  double expected_exponent = 0; // 1 - q for q > 1, else 0
  double max_abs = 0;           // max |phi| on the grid
  std::vector<double> grid;
};

FitResult fit_exponent(const std::vector<double>& eps, const std::vector<double>& abs_phi);
FitResult exponent_fit(double p, double q, cplx lambda, const FitGrid& grid = {});

}  // namespace crown

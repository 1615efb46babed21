#pragma once

#include <complex>

namespace crown {

using cplx = std::complex<double>;

// log Gamma with imaginary part in (-pi, pi]; throws PoleProximity at the poles.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);
// 1/Gamma, exactly 0 at the poles.
cplx rgamma(cplx z);
cplx digamma(cplx z);

// Distance from z to the nearest non-positive integer (infinite if Re z > 0.5 and far).
double pole_distance(cplx z);
bool is_nonpositive_integer(cplx z, double eps = 1e-12);

}  // namespace crown

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "crown/quadrature.hpp"
#include "crown/special.hpp"

namespace crown {

// K_nu(y) = 1/2 int_R e^{-y cosh u + nu u} du, by quadrature on the range where the
// integrand exceeds e^{-40} of its peak.
cplx bessel_k(cplx nu, double y, const QuadratureSpec& spec = {});
// e^y K_nu(y), same quadrature without the underflow.
cplx bessel_k_scaled(cplx nu, double y, const QuadratureSpec& spec = {});
// Hankel expansion sqrt(pi/2y) e^{-y} sum_k a_k(nu) y^{-k}, terms >= 1.
cplx bessel_k_asymptotic(cplx nu, double y, int terms = 1);

// Fourier-Whittaker coefficients a_n for n != 0 with |a_n| <= hecke_constant sqrt|n|.
struct MaassCoefficients {
  std::string name;
  std::function<cplx(int)> a;
  double hecke_constant = 1;

  static MaassCoefficients unit();            // a_{+-1} = 1, all others 0
  static MaassCoefficients hecke_extremal();  // a_n = sqrt|n|
  static MaassCoefficients random(unsigned seed, double hecke_constant = 1);
};

struct MaassPoint {
  double y = 0;
  double abs_phi = 0;
  double scaled = 0;     // |phi(iy)| e^{2 pi y}
  double majorant = 0;   // C F_1 / (1 - e^{-2 pi y})
  double tail_bound = 0; // bound on the dropped terms, times e^{2 pi y}
  int terms = 0;         // largest |n| summed
};

struct MaassReport {
  cplx nu;
  std::string coefficients;
  std::vector<MaassPoint> points;
  double sup_scaled = 0;
  double argmax_y = 0;
  bool attained_at_grid_min = false;
  bool majorant_holds = true;
};

// phi(iy) = sum_{n != 0} a_n sqrt(y) K_nu(2 pi |n| y) on the grid (each y >= 2).
// Throws TruncationFailure for y < 2 or when the tail bound needs more than max_terms.
MaassReport maass_decay_demo(const MaassCoefficients& coeffs, cplx nu, const std::vector<double>& ys,
                             int max_terms = 1000, const QuadratureSpec& spec = {});

// Bound on |K_nu(x)| sqrt(2x/pi) e^x for x > 0, from mu = |Re nu|.
double bessel_k_envelope(cplx nu, double x);

// Gamma quotient of the GL(3) Whittaker Mellin transform, gamma = -alpha - beta.
// Throws PoleProximity when a Gamma argument is within the pole tolerance of a pole.
cplx mellin_rhs(double s1, double s2, cplx alpha, cplx beta);
cplx log_mellin_rhs(double s1, double s2, cplx alpha, cplx beta);

// Asymptotic forms on the diagonal (s, s) and on the axis (s, 0), as logs.
double log_stirling_a1_printed(double s);  // 1/2 (2pi)^{-2s+5/2} e^{-2s} s^{2s-1/2} / 2^s
double log_stirling_a1(double s);          // 2 pi^{-2s} (2pi)^{5/2} 2^{-3s} s^{2s-5/2} e^{-2s}
cplx log_stirling_a2(double s, cplx alpha, cplx beta);  // C (2pi)^{-s} e^{-s} s^{s-1}
cplx stirling_a2_constant(cplx alpha, cplx beta);       // pi Gamma(-alpha/2) Gamma(-beta/2) Gamma(-gamma/2)

struct DiagonalRatios {
  double s = 0;
  cplx printed;    // RHS(s, s) / printed form
  cplx corrected;  // RHS(s, s) / corrected form
};

DiagonalRatios stirling_diagonal(double s, cplx alpha = 0, cplx beta = 0);
// RHS(s, 0) / a2 form; alpha, beta, gamma must stay off the poles.
cplx stirling_axis(double s, cplx alpha, cplx beta);

struct StirlingRatios {
  double s = 0;
  cplx printed_a1;
  cplx corrected_a1;
  cplx a2;
};

StirlingRatios mellin_stirling_check(double s, cplx alpha, cplx beta);

}  // namespace crown

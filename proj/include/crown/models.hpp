#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "crown/special.hpp"

namespace crown {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

CMatrix expm(const CMatrix& m);

// ---- SO(1,2), hyperboloid model, Q(z) = z0^2 - z1^2 - z2^2 ----

cplx lorentz_form(const CVector& z, const CVector& w);  // z0 w0 - sum z_i w_i
CMatrix lorentz_metric(int dim);

CMatrix so12_e1();
CMatrix so12_e2();
CMatrix so12_e3();
CMatrix so12_n(cplx z);
CMatrix so12_a(double t);  // exp(-i t e1)
CMatrix so12_k(double theta);
CMatrix so12_b(double r);
CVector so12_x0();
CVector so12_z1();  // (0, 0, i)

struct OrbitIdentityCheck {
  double deviation = 0;  // max |k b n_{iy} x0 - a_t x0|
  double r = 0;
  double tanh_r = 0;
};

// theta = pi/2, y = sin t, tanh r = (y^2/2)/(1 - y^2/2). Valid for |t| < pi/2;
// throws ChartBoundary outside.
OrbitIdentityCheck so12_identity_check(double t);

CVector boundary_map(double s, int sign);  // exp(-i s (e1 + sign e3)) z1
double boundary_map_deviation(double s, int sign);  // against (s, sign s, i)

// xi in Hor(X) = {Q(xi) = 0, xi0 > 0} with z . xi = 1, if any.
std::optional<Eigen::Vector3d> horocycle_witness(const CVector& z);
double complexified_hyperboloid_defect(const CVector& z);  // |Q(z) - 1|

// Orbit representatives of the three families: 1: (x0, i y1, 0) with 0 < x0 <= 1;
// 2: (0, i y1, x2) with x2 > 0; 3: (1 + i y0, 1 + i y0, sign i).
CVector xi_n_representative(int family, double param, int sign = 1);
Eigen::Matrix3d random_so12(std::mt19937_64& rng, double spread = 1.0);

struct BoundarySuiteReport {
  double boundary_max_deviation = 0;
  int boundary_points = 0;
  std::array<double, 3> witness_max_residual{};
  std::array<int, 3> witness_samples{};
  std::array<int, 3> witness_failures{};
  int imaginary_samples = 0;
  int imaginary_witnesses = 0;  // must stay 0
};

BoundarySuiteReport so12_boundary_suite(unsigned seed = 7, int samples_per_family = 200);

// ---- region predicates in nilpotent coordinates ----

struct RegionVerdict {
  std::string model;
  bool inside = false;       // closed-form predicate
  double predicate = 0;      // c|Y|^2, 2(x^2+y^2)+|z|, or operator norm
  bool zero_found = false;   // scan of the zero-locus criterion
  double scan_min = 0;       // smallest |F| found
  bool consistent = true;    // inside == !zero_found (Sp: eigenvalue test agrees)
  std::vector<double> witness;
};

// SO(1, p+1), c = 1/(4p), inside iff c|Y|^2 < 1.
RegionVerdict so1p_region(int p, const std::vector<double>& y);
// SU(2,1) coordinates x X_alpha + y Y_alpha + z X_2alpha.
RegionVerdict su21_region(double x, double y, double z);
// Sp(n): I + Z and I - Z positive definite.
RegionVerdict sp_region(const RMatrix& z);
// model: "SO(1,n)" (point = Y, n = p+1), "SU(2,1)" (point = x, y, z), "Sp(n)" (row-major n x n);
// throws UnsupportedModel.
RegionVerdict crown_region_check(const std::string& model, const std::vector<double>& point);

// |F| for the SU(2,1) zero-locus criterion at nilpotent offset (u, v, w).
double su21_criterion(double u, double v, double w, double x, double y, double z);

struct GridAgreement {
  int points = 0;
  int disagreements = 0;
  double max_witness_residual = 0;
};

GridAgreement su21_grid_agreement(int n = 50, unsigned seed = 7);

// First s on the grid s0, s0 + step, ... where s Z0 leaves the region.
double sp_flip_location(const RMatrix& z0, double s0, double step, int steps);

double so1n_form_deviation(int n, int samples, unsigned seed);
double sp_form_deviation(int n, int samples, unsigned seed);

struct SpOrbitCheck {
  double invariant_deviation = 0;  // per block cosh of the pair distance
  double block_deviation = 0;      // SO(1,2) identity at angle 2 t_j
};

// n_{i sin 2t} x0 and a_{e^{it}} x0 in the Siegel model, |t_j| < pi/4.
SpOrbitCheck sp_orbit_identity_check(const std::vector<double>& t);

// ---- Iwasawa projection, convexity, SL(n) phase ----

struct IwasawaAPart {
  CVector a_squared;  // Delta_i / Delta_{i-1}
  RVector im_log;     // Im log a_i = arg(a_i^2)/2
};

// m = g g^T for g in the complex group; complex LDL^T without pivoting.
IwasawaAPart iwasawa_a_part(const CMatrix& m);

RMatrix random_special_orthogonal(int n, std::mt19937_64& rng);

// Largest violation of v in the convex hull of the S_n orbit of y (majorization).
double permutohedron_excess(const RVector& v, const RVector& y);

struct ConvexityReport {
  int samples = 0;
  int violations = 0;
  double max_excess = 0;
  int chart_failures = 0;
};

ConvexityReport convexity_check(int n, int samples, unsigned seed);

struct PhaseSample {
  double phase = 0;
  double bound = 0;
  bool holds = true;
};

PhaseSample sln_phase(const RVector& bottom_row, double t);

struct PhaseReport {
  int n = 0;
  double t = 0;
  int samples = 0;
  int violations = 0;
  double max_phase = 0;
  double bound = 0;
  double extremal_phase = 0;  // exact max over unit k (generalized eigenvalue)
  double gap = 0;             // bound - extremal_phase
};

PhaseReport sln_phase_bound(int n, double t, int samples, unsigned seed);

}  // namespace crown

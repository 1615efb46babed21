#include "crown/models.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <regex>

#include "crown/errors.hpp"
#include "crown/tolerances.hpp"

namespace crown {

namespace {

const cplx I(0, 1);

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

CMatrix mat3(std::initializer_list<cplx> v) {
  CMatrix m(3, 3);
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

CMatrix expm(const CMatrix& m) { return m.exp(); }

cplx lorentz_form(const CVector& z, const CVector& w) {
  cplx s = z(0) * w(0);
  for (Eigen::Index i = 1; i < z.size(); ++i) s -= z(i) * w(i);
  return s;
}

CMatrix lorentz_metric(int dim) {
  CMatrix eta = -CMatrix::Identity(dim, dim);
  eta(0, 0) = 1;
  return eta;
}

CMatrix so12_e1() { return mat3({0, 0, 1, 0, 0, 0, 1, 0, 0}); }
CMatrix so12_e2() { return mat3({0, 1, 0, 1, 0, 0, 0, 0, 0}); }
CMatrix so12_e3() { return mat3({0, 0, 0, 0, 0, 1, 0, -1, 0}); }

CMatrix so12_n(cplx z) {
  cplx h = z * z / 2.0;
  return mat3({1.0 + h, z, -h, z, 1, -z, h, z, 1.0 - h});
}

CMatrix so12_a(double t) {
  double c = std::cos(t), s = std::sin(t);
  return mat3({c, 0, -I * s, 0, 1, 0, -I * s, 0, c});
}

CMatrix so12_k(double theta) {
  double c = std::cos(theta), s = std::sin(theta);
  return mat3({1, 0, 0, 0, c, s, 0, -s, c});
}

CMatrix so12_b(double r) {
  double c = std::cosh(r), s = std::sinh(r);
  return mat3({c, 0, s, 0, 1, 0, s, 0, c});
}

CVector so12_x0() { return CVector::Unit(3, 0); }

CVector so12_z1() {
  CVector z = CVector::Zero(3);
  z(2) = I;
  return z;
}

OrbitIdentityCheck so12_identity_check(double t) {
  if (!(std::abs(t) < M_PI / 2)) throw Error(ErrorKind::ChartBoundary, "orbit identity needs |t| < pi/2");
  OrbitIdentityCheck out;
  double y = std::sin(t);
  out.tanh_r = (y * y / 2) / (1 - y * y / 2);
  out.r = std::atanh(out.tanh_r);
  CVector lhs = so12_k(M_PI / 2) * so12_b(out.r) * so12_n(I * y) * so12_x0();
  CVector rhs = so12_a(t) * so12_x0();
  out.deviation = (lhs - rhs).cwiseAbs().maxCoeff();
  return out;
}

CVector boundary_map(double s, int sign) {
  return expm(-I * s * (so12_e1() + double(sign) * so12_e3())) * so12_z1();
}

double boundary_map_deviation(double s, int sign) {
  CVector expect(3);
  expect << s, double(sign) * s, I;
  return (boundary_map(s, sign) - expect).cwiseAbs().maxCoeff();
}

double complexified_hyperboloid_defect(const CVector& z) { return std::abs(lorentz_form(z, z) - 1.0); }

std::optional<Eigen::Vector3d> horocycle_witness(const CVector& z) {
  Eigen::Vector3d x = z.real(), y = z.imag();
  std::vector<double> angles;
  double radius = std::hypot(y(1), y(2));
  if (radius < 1e-14) {
    if (std::abs(y(0)) > 1e-14) return std::nullopt;
    angles.push_back(std::atan2(-x(2), -x(1)));
  } else {
    double c = y(0) / radius;
    if (std::abs(c) > 1) return std::nullopt;
    double psi = std::atan2(y(2), y(1)), d = std::acos(c);
    angles = {psi + d, psi - d};
  }
  std::optional<Eigen::Vector3d> best;
  double best_re = 1e-12;
  for (double phi : angles) {
    Eigen::Vector3d dir(1, std::cos(phi), std::sin(phi));
    cplx f = lorentz_form(z, dir.cast<cplx>());
    if (f.real() > best_re) {
      best_re = f.real();
      best = dir / f.real();
    }
  }
  return best;
}

CVector xi_n_representative(int family, double param, int sign) {
  CVector z(3);
  switch (family) {
    case 1: {
      if (!(param > 0 && param <= 1)) throw Error(ErrorKind::ChartBoundary, "family 1 needs 0 < x0 <= 1");
      z << param, I * (double(sign) * std::sqrt(1 - param * param)), 0;
      break;
    }
    case 2: {
      if (!(param > 0)) throw Error(ErrorKind::ChartBoundary, "family 2 needs x2 > 0");
      z << 0, I * (double(sign) * std::sqrt(1 + param * param)), param;
      break;
    }
    case 3:
      z << 1.0 + I * param, 1.0 + I * param, I * double(sign);
      break;
    default:
      throw Error(ErrorKind::UnsupportedModel, "families are 1, 2, 3");
  }
  return z;
}

Eigen::Matrix3d random_so12(std::mt19937_64& rng, double spread) {
  std::uniform_real_distribution<double> angle(0, 2 * M_PI), boost(-spread, spread);
  CMatrix g = so12_k(angle(rng)) * so12_b(boost(rng)) * so12_k(angle(rng));
  return g.real();
}

BoundarySuiteReport so12_boundary_suite(unsigned seed, int samples_per_family) {
  BoundarySuiteReport rep;
  for (int i = 0; i <= 100; ++i) {
    double s = 0.1 * i;
    for (int sign : {1, -1}) {
      rep.boundary_max_deviation = std::max(rep.boundary_max_deviation, boundary_map_deviation(s, sign));
      ++rep.boundary_points;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1), wide(-3, 3);
  for (int family = 1; family <= 3; ++family) {
    for (int k = 0; k < samples_per_family; ++k) {
      double param = family == 1 ? 0.05 + 0.95 * unit(rng) : family == 2 ? 0.05 + 3 * unit(rng) : wide(rng);
      int sign = unit(rng) < 0.5 ? 1 : -1;
      CVector z = random_so12(rng).cast<cplx>() * xi_n_representative(family, param, sign);
      ++rep.witness_samples[family - 1];
      auto xi = horocycle_witness(z);
      double residual = xi ? std::abs(lorentz_form(z, xi->cast<cplx>()) - 1.0) : INFINITY;
      bool ok = xi && residual < tol::kWitness && (*xi)(0) > 0 &&
                std::abs(lorentz_form(xi->cast<cplx>(), xi->cast<cplx>())) < tol::kWitness * xi->squaredNorm();
      if (!ok) ++rep.witness_failures[family - 1];
      if (xi) rep.witness_max_residual[family - 1] = std::max(rep.witness_max_residual[family - 1], residual);
    }
  }
  for (int k = 0; k < samples_per_family; ++k) {
    double u = wide(rng), phi = 2 * M_PI * unit(rng);
    CVector z(3);
    z << I * std::sinh(u), I * (std::cosh(u) * std::cos(phi)), I * (std::cosh(u) * std::sin(phi));
    ++rep.imaginary_samples;
    if (horocycle_witness(z)) ++rep.imaginary_witnesses;
  }
  return rep;
}

// ---- regions ----

RegionVerdict so1p_region(int p, const std::vector<double>& y) {
  if (p < 1 || static_cast<int>(y.size()) != p)
    throw Error(ErrorKind::UnsupportedModel, "SO(1,p+1) needs a point with p coordinates");
  RegionVerdict v;
  v.model = "SO(1," + std::to_string(p + 1) + ")";
  double c = 1.0 / (4 * p), n2 = 0;
  for (double t : y) n2 += t * t;
  double n = std::sqrt(n2);
  v.predicate = c * n2;
  v.inside = v.predicate < 1;
  // Y' = a Y/|Y| + r e_perp; F = 1 + c(a^2 + r^2 - |Y|^2 - 2i a |Y|).
  auto F = [&](double a, double r) { return 1.0 + c * cplx(a * a + r * r - n2, -2 * a * n); };
  double span = n + 2 / std::sqrt(c) + 1;
  int steps = 200;
  double best_a = 0, best_r = 0;
  v.scan_min = INFINITY;
  for (int i = 0; i <= steps; ++i) {
    double a = -span + 2 * span * i / steps;
    for (int j = 0; j <= (p == 1 ? 0 : steps); ++j) {
      double r = span * j / steps;
      double f = std::abs(F(a, r));
      if (f < v.scan_min) v.scan_min = f, best_a = a, best_r = r;
    }
  }
  for (int it = 0; it < 60; ++it) {
    cplx f = F(best_a, best_r);
    cplx da = c * cplx(2 * best_a, -2 * n), dr = 2 * c * best_r;
    if (p == 1) {
      double g = std::norm(da);
      if (g == 0) break;
      best_a -= (std::conj(da) * f).real() / g;
    } else {
      Eigen::Matrix2d j;
      j << da.real(), dr.real(), da.imag(), dr.imag();
      if (std::abs(j.determinant()) < 1e-300) break;
      Eigen::Vector2d step = j.fullPivLu().solve(Eigen::Vector2d(f.real(), f.imag()));
      best_a -= step(0);
      best_r = std::abs(best_r - step(1));
    }
    v.scan_min = std::min(v.scan_min, std::abs(F(best_a, best_r)));
  }
  v.zero_found = v.scan_min < tol::kZeroLocus;
  if (v.zero_found) v.witness = {best_a, best_r};
  v.consistent = v.inside == !v.zero_found;
  return v;
}

double su21_criterion(double u, double v, double w, double x, double y, double z) {
  cplx a = 1.0 + std::pow(cplx(u, x), 2) + std::pow(cplx(v, y), 2);
  cplx b = cplx(w, z + 2 * (u * y - v * x));
  return std::abs(a * a + b * b);
}

RegionVerdict su21_region(double x, double y, double z) {
  RegionVerdict v;
  v.model = "SU(2,1)";
  double rho = std::hypot(x, y), phi = std::atan2(y, x);
  v.predicate = 2 * rho * rho + std::abs(z);
  v.inside = v.predicate < 1;
  v.scan_min = INFINITY;
  // In the frame y = 0: v^2 - 2 s rho v + (1 + u^2 - rho^2 + s z) = 0, w = 2 s u rho.
  for (int k = -20; k <= 20; ++k) {
    double u = 0.1 * k;
    for (int s : {1, -1}) {
      double disc = 2 * rho * rho - 1 - u * u - s * z;
      double vv = s * rho + std::sqrt(std::max(disc, 0.0));
      double w = 2 * s * u * rho;
      double ur = u * std::cos(phi) - vv * std::sin(phi);
      double vr = u * std::sin(phi) + vv * std::cos(phi);
      double f = su21_criterion(ur, vr, w, x, y, z);
      if (disc >= 0 && f < tol::kZeroLocus && !v.zero_found) {
        v.zero_found = true;
        v.witness = {ur, vr, w};
      }
      v.scan_min = std::min(v.scan_min, f);
    }
  }
  v.consistent = v.inside == !v.zero_found;
  return v;
}

RegionVerdict sp_region(const RMatrix& z) {
  if (z.rows() != z.cols() || z.rows() < 1 || z.rows() > 8)
    throw Error(ErrorKind::UnsupportedModel, "Sp(n) needs a square matrix with n <= 8");
  if ((z - z.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw Error(ErrorKind::UnsupportedModel, "Sp(n) point must be symmetric");
  RegionVerdict v;
  v.model = "Sp(" + std::to_string(z.rows()) + ")";
  RMatrix id = RMatrix::Identity(z.rows(), z.cols());
  Eigen::SelfAdjointEigenSolver<RMatrix> plus(id + z), minus(id - z);
  v.inside = plus.eigenvalues().minCoeff() > 0 && minus.eigenvalues().minCoeff() > 0;
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(z);
  v.predicate = eig.eigenvalues().cwiseAbs().maxCoeff();
  v.scan_min = std::min(plus.eigenvalues().minCoeff(), minus.eigenvalues().minCoeff());
  v.zero_found = !v.inside;
  v.consistent = v.inside == (v.predicate < 1);
  return v;
}

RegionVerdict crown_region_check(const std::string& model, const std::vector<double>& point) {
  std::smatch m;
  static const std::regex so(R"(SO\(1,(\d+)\))"), sp(R"(Sp\((\d+)\))");
  if (std::regex_match(model, m, so)) return so1p_region(std::stoi(m[1]) - 1, point);
  if (model == "SU(2,1)") {
    if (point.size() != 3) throw Error(ErrorKind::UnsupportedModel, "SU(2,1) point is (x, y, z)");
    return su21_region(point[0], point[1], point[2]);
  }
  if (std::regex_match(model, m, sp)) {
    int n = std::stoi(m[1]);
    if (static_cast<int>(point.size()) != n * n) throw Error(ErrorKind::UnsupportedModel, "Sp(n) point is n*n");
    RMatrix z(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) z(i, j) = point[i * n + j];
    return sp_region(z);
  }
  throw Error(ErrorKind::UnsupportedModel, "unknown model " + model);
}

GridAgreement su21_grid_agreement(int n, unsigned seed) {
  GridAgreement g;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (int i = 0; i < n; ++i) {
    double rho = 0.9 * (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      double z = -1.1 + 2.2 * (j + 0.37) / n, phi = angle(rng);
      double x = rho * std::cos(phi), y = rho * std::sin(phi);
      auto v = su21_region(x, y, z);
      ++g.points;
      if (!v.consistent) ++g.disagreements;
      if (v.zero_found)
        g.max_witness_residual =
            std::max(g.max_witness_residual, su21_criterion(v.witness[0], v.witness[1], v.witness[2], x, y, z));
    }
  }
  return g;
}

double sp_flip_location(const RMatrix& z0, double s0, double step, int steps) {
  for (int k = 0; k <= steps; ++k) {
    double s = s0 + k * step;
    if (!sp_region(s * z0).inside) return s;
  }
  return NAN;
}

double so1n_form_deviation(int n, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 0.5);
  CMatrix eta = lorentz_metric(n + 1);
  double worst = 0;
  auto check = [&](const CMatrix& g) { worst = std::max(worst, max_abs(g.transpose() * eta * g - eta)); };
  for (int k = 0; k < samples; ++k) {
    CMatrix x = CMatrix::Zero(n + 1, n + 1);
    for (int j = 1; j <= n; ++j) x(0, j) = x(j, 0) = gauss(rng);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        x(i, j) = gauss(rng);
        x(j, i) = -x(i, j);
      }
    check(expm(x));
  }
  if (n == 2) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int k = 0; k < samples; ++k) {
      check(so12_n(cplx(u(rng), u(rng))));
      check(so12_a(u(rng)));
      check(so12_k(u(rng)));
      check(so12_b(u(rng)));
    }
  }
  return worst;
}

double sp_form_deviation(int n, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 1);
  CMatrix j = CMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = CMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  double worst = 0;
  auto check = [&](const CMatrix& g) { worst = std::max(worst, max_abs(g.transpose() * j * g - j)); };
  for (int sample = 0; sample < samples; ++sample) {
    CMatrix s(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) s(a, b) = s(b, a) = cplx(gauss(rng), gauss(rng));
    CMatrix nz = CMatrix::Identity(2 * n, 2 * n);
    nz.topRightCorner(n, n) = s;
    CMatrix az = CMatrix::Zero(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
      cplx z = std::polar(std::exp(0.5 * gauss(rng)), gauss(rng));
      az(a, a) = z;
      az(n + a, n + a) = 1.0 / z;
    }
    CMatrix u(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) u(a, b) = cplx(gauss(rng), gauss(rng));
    CMatrix q = Eigen::HouseholderQR<CMatrix>(u).householderQ();
    CMatrix k(2 * n, 2 * n);
    k << q.real().cast<cplx>(), -q.imag().cast<cplx>(), q.imag().cast<cplx>(), q.real().cast<cplx>();
    check(nz);
    check(az);
    check(k);
    check(k * az * nz);
  }
  return worst;
}

namespace {

// g(Z) = (A Z + B)(C Z + D)^{-1}
CMatrix fractional(const CMatrix& g, const CMatrix& z) {
  Eigen::Index n = z.rows();
  CMatrix a = g.topLeftCorner(n, n), b = g.topRightCorner(n, n);
  CMatrix c = g.bottomLeftCorner(n, n), d = g.bottomRightCorner(n, n);
  return (a * z + b) * (c * z + d).inverse();
}

// cosh of the hyperbolic distance between z and conj(w), both in the upper half plane.
double pair_invariant(cplx z, cplx w) {
  cplx wb = std::conj(w);
  return 1 + std::norm(z - wb) / (2 * z.imag() * wb.imag());
}

}  // namespace

SpOrbitCheck sp_orbit_identity_check(const std::vector<double>& t) {
  int n = static_cast<int>(t.size());
  SpOrbitCheck out;
  CMatrix id = CMatrix::Identity(n, n);
  CMatrix nz = CMatrix::Identity(2 * n, 2 * n), a = CMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    if (!(std::abs(t[j]) < M_PI / 4)) throw Error(ErrorKind::ChartBoundary, "Sp(n) orbit identity needs |t_j| < pi/4");
    nz(j, n + j) = I * std::sin(2 * t[j]);
    a(j, j) = std::exp(I * t[j]);
    a(n + j, n + j) = std::exp(-I * t[j]);
  }
  CMatrix z1 = fractional(nz, I * id), w1 = fractional(nz, -I * id);
  CMatrix z2 = fractional(a, I * id), w2 = fractional(a, -I * id);
  for (int j = 0; j < n; ++j) {
    double c1 = pair_invariant(z1(j, j), w1(j, j)), c2 = pair_invariant(z2(j, j), w2(j, j));
    out.invariant_deviation = std::max(out.invariant_deviation, std::abs(c1 - c2) / c2);
    out.block_deviation = std::max(out.block_deviation, so12_identity_check(2 * t[j]).deviation);
  }
  return out;
}

// ---- Iwasawa, convexity, phase ----

IwasawaAPart iwasawa_a_part(const CMatrix& m) {
  Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::ChartBoundary, "matrix must be square");
  double scale = std::max(1.0, max_abs(m));
  CMatrix l = CMatrix::Identity(n, n);
  CVector d(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    cplx djj = m(j, j);
    for (Eigen::Index k = 0; k < j; ++k) djj -= l(j, k) * l(j, k) * d(k);
    if (std::abs(djj) < tol::kChartMinor * scale)
      throw Error(ErrorKind::ChartBoundary, "leading principal minor " + std::to_string(j + 1) + " vanishes");
    d(j) = djj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * d(k);
      l(i, j) = s / djj;
    }
  }
  IwasawaAPart out;
  out.a_squared = d;
  out.im_log.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double arg = std::arg(d(i));
    if (!(std::abs(arg) < M_PI - 1e-12))
      throw Error(ErrorKind::ChartBoundary, "Im log a^2 leaves the principal branch");
    out.im_log(i) = arg / 2;
  }
  return out;
}

RMatrix random_special_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0, 1);
  RMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<RMatrix> qr(g);
  RMatrix q = qr.householderQ();
  RMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1;
  if (q.determinant() < 0) q.col(0) *= -1;
  return q;
}

double permutohedron_excess(const RVector& v, const RVector& y) {
  std::vector<double> a(v.data(), v.data() + v.size()), b(y.data(), y.data() + y.size());
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  double sa = 0, sb = 0, excess = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (i + 1 < a.size()) excess = std::max(excess, sa - sb);
  }
  return std::max(excess, std::abs(sa - sb));
}

ConvexityReport convexity_check(int n, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1, 1), radius(0, 0.999);
  ConvexityReport rep;
  for (int s = 0; s < samples; ++s) {
    RVector y(n);
    for (int i = 0; i < n; ++i) y(i) = unit(rng);
    y.array() -= y.mean();
    double spread = y.maxCoeff() - y.minCoeff();
    if (spread > 0) y *= radius(rng) * (M_PI / 2) / spread;  // |y_i - y_j| < pi/2
    RMatrix k = random_special_orthogonal(n, rng);
    CVector e(n);
    for (int i = 0; i < n; ++i) e(i) = std::exp(2.0 * I * y(i));
    CMatrix m = k.cast<cplx>() * e.asDiagonal() * k.transpose().cast<cplx>();
    ++rep.samples;
    try {
      auto a = iwasawa_a_part(m);
      double ex = permutohedron_excess(a.im_log, y);
      rep.max_excess = std::max(rep.max_excess, ex);
      if (ex > tol::kConvexity) ++rep.violations;
    } catch (const Error&) {
      ++rep.chart_failures;
    }
  }
  return rep;
}

PhaseSample sln_phase(const RVector& k, double t) {
  Eigen::Index n = k.size();
  double s = 0, p = 0;
  for (Eigen::Index a = 0; a + 1 < n; ++a) {
    s += k(a) * k(a);
    p += k(a) * k(a + 1);
  }
  PhaseSample out;
  out.phase = 0.5 * std::arg(cplx(1 - t * t * s, 2 * t * p));
  out.bound = 0.5 * std::atan(2 * std::abs(t) / (1 - t * t));
  out.holds = std::abs(out.phase) <= out.bound + tol::kPhaseSlack;
  return out;
}

PhaseReport sln_phase_bound(int n, double t, int samples, unsigned seed) {
  if (n < 2) throw Error(ErrorKind::UnsupportedModel, "SL(n) phase needs n >= 2");
  if (!(std::abs(t) < 1)) throw Error(ErrorKind::ChartBoundary, "SL(n) phase needs |t| < 1");
  PhaseReport rep;
  rep.n = n;
  rep.t = t;
  rep.bound = 0.5 * std::atan(2 * std::abs(t) / (1 - t * t));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    RVector k = random_special_orthogonal(n, rng).row(n - 1).transpose();
    auto ph = sln_phase(k, t);
    ++rep.samples;
    rep.max_phase = std::max(rep.max_phase, std::abs(ph.phase));
    if (!ph.holds) ++rep.violations;
  }
  // max over unit k of |2t k^T A k / k^T B k|, B = I - t^2 diag(1,...,1,0)
  RMatrix a = RMatrix::Zero(n, n), b = RMatrix::Identity(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    a(i, i + 1) = a(i + 1, i) = 0.5;
    b(i, i) -= t * t;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<RMatrix> ges(a, b);
  double lam = ges.eigenvalues().cwiseAbs().maxCoeff();
  rep.extremal_phase = 0.5 * std::atan(2 * std::abs(t) * lam);
  rep.gap = rep.bound - rep.extremal_phase;
  return rep;
}

}  // namespace crown

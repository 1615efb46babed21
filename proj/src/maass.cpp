#include "crown/maass.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "crown/errors.hpp"
#include "crown/tolerances.hpp"

namespace crown {

namespace {

constexpr double kLogCutoff = 40;

// log of the integrand modulus, e^{-y(cosh u - 1) + mu u}
double log_modulus(double y, double mu, double u) { return -y * (std::cosh(u) - 1) + mu * u; }

// Point on the side `dir` of the peak where the log modulus has dropped by kLogCutoff.
double cutoff(double y, double mu, double peak, double dir) {
  double top = log_modulus(y, mu, peak);
  auto drop = [&](double u) { return log_modulus(y, mu, u) - (top - kLogCutoff); };
  double inner = 0, step = 1;
  while (drop(peak + dir * step) > 0) {
    inner = step;
    step *= 2;
  }
  double a = peak + dir * inner, b = peak + dir * step;
  if (b < a) std::swap(a, b);
  auto [lo, hi] = boost::math::tools::bisect(drop, a, b, boost::math::tools::eps_tolerance<double>(40));
  return 0.5 * (lo + hi);
}

cplx check_and_log_gamma(cplx z) {
  if (pole_distance(z) < tol::kPoleDistance)
    throw Error(ErrorKind::PoleProximity, "Gamma argument too close to a pole");
  return log_gamma(z);
}

}  // namespace

cplx bessel_k_scaled(cplx nu, double y, const QuadratureSpec& spec) {
  if (!(y > 0) || !std::isfinite(y)) throw Error(ErrorKind::QuadratureFailure, "bessel_k needs y > 0");
  double mu = nu.real();
  double peak = std::asinh(mu / y);
  double lo = cutoff(y, mu, peak, -1), hi = cutoff(y, mu, peak, 1);
  auto f = [&](double u) { return std::exp(cplx(-y * (std::cosh(u) - 1), 0) + nu * u); };
  return 0.5 * integrate_complex(f, lo, hi, spec);
}

cplx bessel_k(cplx nu, double y, const QuadratureSpec& spec) { return std::exp(-y) * bessel_k_scaled(nu, y, spec); }

cplx bessel_k_asymptotic(cplx nu, double y, int terms) {
  cplx sum = 0, a = 1;
  for (int k = 0; k < terms; ++k) {
    sum += a;
    double odd = 2 * k + 1;
    a *= (4.0 * nu * nu - odd * odd) / (8.0 * (k + 1) * y);
  }
  return std::sqrt(M_PI / (2 * y)) * std::exp(-y) * sum;
}

double bessel_k_envelope(cplx nu, double x) {
  double mu = std::abs(nu.real());
  if (mu <= 0.5) return 1;
  double r = 1 - (mu - 0.5) / (2 * x);
  if (!(r > 0)) return std::numeric_limits<double>::infinity();
  return std::pow(r, -(mu + 0.5));
}

MaassCoefficients MaassCoefficients::unit() {
  return {"unit", [](int n) { return std::abs(n) == 1 ? cplx(1) : cplx(0); }, 1};
}

MaassCoefficients MaassCoefficients::hecke_extremal() {
  return {"hecke-extremal", [](int n) { return cplx(std::sqrt(std::abs(n))); }, 1};
}

MaassCoefficients MaassCoefficients::random(unsigned seed, double hecke_constant) {
  auto a = [seed, hecke_constant](int n) {
    std::seed_seq seq{seed, static_cast<unsigned>(n + (1 << 20))};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(-1, 1);
    return cplx(hecke_constant * std::sqrt(std::abs(n)) * u(rng));
  };
  return {"random", a, hecke_constant};
}

MaassReport maass_decay_demo(const MaassCoefficients& coeffs, cplx nu, const std::vector<double>& ys, int max_terms,
                             const QuadratureSpec& spec) {
  MaassReport rep;
  rep.nu = nu;
  rep.coefficients = coeffs.name;
  double c = coeffs.hecke_constant;
  for (double y : ys) {
    if (!(y >= 2)) throw Error(ErrorKind::TruncationFailure, "Maass demo needs y >= 2");
    double q = std::exp(-2 * M_PI * y);
    MaassPoint p;
    p.y = y;
    p.majorant = c * bessel_k_envelope(nu, 2 * M_PI * y) / (1 - q);
    int n = 0;
    cplx sum = 0;
    while (true) {
      ++n;
      if (n > max_terms) throw Error(ErrorKind::TruncationFailure, "tail bound not reached within max_terms");
      cplx an = coeffs.a(n) + coeffs.a(-n);
      if (an != cplx(0)) {
        double x = 2 * M_PI * n * y;
        sum += an * std::sqrt(y) * bessel_k_scaled(nu, x, spec) * std::exp(-2 * M_PI * (n - 1) * y);
      }
      double tail = c * bessel_k_envelope(nu, 2 * M_PI * (n + 1) * y) * std::exp(-2 * M_PI * n * y) / (1 - q);
      if (tail < tol::kMaassTail) {
        p.tail_bound = tail;
        break;
      }
    }
    p.terms = n;
    p.scaled = std::abs(sum);
    p.abs_phi = p.scaled * q;
    if (p.scaled > p.majorant * (1 + 1e-9)) rep.majorant_holds = false;
    if (rep.points.empty() || p.scaled > rep.sup_scaled) {
      rep.sup_scaled = p.scaled;
      rep.argmax_y = y;
    }
    rep.points.push_back(p);
  }
  if (!ys.empty()) rep.attained_at_grid_min = rep.argmax_y == *std::min_element(ys.begin(), ys.end());
  return rep;
}

cplx log_mellin_rhs(double s1, double s2, cplx alpha, cplx beta) {
  cplx gamma = -alpha - beta;
  cplx sum = std::log(0.25) - (s1 + s2) * std::log(M_PI);
  for (cplx p : {alpha, beta, gamma}) {
    sum += check_and_log_gamma((s1 + p) / 2.0);
    sum += check_and_log_gamma((s2 - p) / 2.0);
  }
  return sum - check_and_log_gamma(cplx((s1 + s2) / 2, 0));
}

cplx mellin_rhs(double s1, double s2, cplx alpha, cplx beta) { return std::exp(log_mellin_rhs(s1, s2, alpha, beta)); }

double log_stirling_a1_printed(double s) {
  return std::log(0.5) + (-2 * s + 2.5) * std::log(2 * M_PI) - 2 * s + (2 * s - 0.5) * std::log(s) -
         s * std::log(2.0);
}

double log_stirling_a1(double s) {
  return std::log(2.0) - 2 * s * std::log(M_PI) + 2.5 * std::log(2 * M_PI) - 3 * s * std::log(2.0) +
         (2 * s - 2.5) * std::log(s) - 2 * s;
}

cplx stirling_a2_constant(cplx alpha, cplx beta) {
  cplx gamma = -alpha - beta;
  return M_PI * std::exp(check_and_log_gamma(-alpha / 2.0) + check_and_log_gamma(-beta / 2.0) +
                         check_and_log_gamma(-gamma / 2.0));
}

cplx log_stirling_a2(double s, cplx alpha, cplx beta) {
  return std::log(stirling_a2_constant(alpha, beta)) - s * std::log(2 * M_PI) - s + (s - 1) * std::log(s);
}

DiagonalRatios stirling_diagonal(double s, cplx alpha, cplx beta) {
  cplx diag = log_mellin_rhs(s, s, alpha, beta);
  return {s, std::exp(diag - log_stirling_a1_printed(s)), std::exp(diag - log_stirling_a1(s))};
}

cplx stirling_axis(double s, cplx alpha, cplx beta) {
  return std::exp(log_mellin_rhs(s, 0, alpha, beta) - log_stirling_a2(s, alpha, beta));
}

StirlingRatios mellin_stirling_check(double s, cplx alpha, cplx beta) {
  auto d = stirling_diagonal(s, alpha, beta);
  return {s, d.printed, d.corrected, stirling_axis(s, alpha, beta)};
}

}  // namespace crown

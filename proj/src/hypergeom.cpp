#include "crown/hypergeom.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>

#include "crown/errors.hpp"
#include "crown/tolerances.hpp"

namespace crown {

namespace {

constexpr double kRegion = 0.75;
constexpr double kInnerRegion = 0.9;

cplx snap_integer(cplx x) {
  double n = std::round(x.real());
  if (std::abs(x - cplx(n, 0)) < 1e-12) return {n, 0};
  return x;
}

bool terminating(cplx a) { return is_nonpositive_integer(a); }

cplx power_series(cplx a, cplx b, cplx c, cplx z) {
  if (is_nonpositive_integer(c) && !(terminating(a) && a.real() > c.real()) &&
      !(terminating(b) && b.real() > c.real()))
    throw Error(ErrorKind::SeriesDivergence, "c is a non-positive integer");
  cplx term = 1.0, sum = 1.0;
  int small = 0;
  for (int n = 0; n < tol::kSeriesMaxTerms; ++n) {
    term *= (a + double(n)) * (b + double(n)) / ((c + double(n)) * double(n + 1)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= tol::kSeriesTerm * std::abs(sum)) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorKind::SeriesDivergence, "power series did not converge in 10^4 terms");
}

// sum_n coef_n w^n [log w + bracket_n], shared by the logarithmic connection formulas.
template <class Coef, class Bracket>
cplx log_series(Coef coef, Bracket bracket, cplx w) {
  cplx lw = std::log(w);
  cplx sum = 0.0, wn = 1.0;
  int small = 0;
  for (int n = 0; n < tol::kSeriesMaxTerms; ++n) {
    cplx term = coef(n) * wn * (lw + bracket(n));
    sum += term;
    wn *= w;
    if (std::abs(term) <= tol::kSeriesTerm * std::abs(sum) || wn == 0.0) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  throw Error(ErrorKind::SeriesDivergence, "logarithmic series did not converge in 10^4 terms");
}

cplx connection(cplx a, cplx b, cplx c, cplx w) {
  if (std::abs(w) > kInnerRegion)
    throw Error(ErrorKind::ConnectionFormulaFailure, "|1-z| too large for the connection formula");
  cplx s = c - a - b;
  double m_real = std::round(s.real());
  bool integer = std::abs(s - cplx(m_real, 0)) < tol::kIntegerParameter;
  if (w == 0.0) {
    if (s.real() <= 0) throw Error(ErrorKind::ConnectionFormulaFailure, "F diverges at z = 1 when Re(c-a-b) <= 0");
    return std::exp(log_gamma(c) + log_gamma(s)) * rgamma(c - a) * rgamma(c - b);
  }
  if (!integer) {
    cplx t1 = std::exp(log_gamma(c) + log_gamma(s)) * rgamma(c - a) * rgamma(c - b) *
              power_series(a, b, a + b - c + 1.0, w);
    cplx t2 = std::pow(w, s) * std::exp(log_gamma(c) + log_gamma(-s)) * rgamma(a) * rgamma(b) *
              power_series(c - a, c - b, s + 1.0, w);
    return t1 + t2;
  }
  int m = static_cast<int>(m_real);
  cplx lgc = log_gamma(c);
  if (m == 0) {
    cplx pa = digamma(a), pb = digamma(b), p1 = digamma(1.0);
    cplx coef = 1.0;
    int last = 0;
    auto coef_n = [&](int n) {
      for (; last < n; ++last) coef *= (a + double(last)) * (b + double(last)) / (double(last + 1) * double(last + 1));
      return coef;
    };
    cplx psi_a = pa, psi_b = pb, psi_1 = p1;
    int last_psi = 0;
    auto bracket = [&](int n) {
      for (; last_psi < n; ++last_psi) {
        psi_a += 1.0 / (a + double(last_psi));
        psi_b += 1.0 / (b + double(last_psi));
        psi_1 += 1.0 / double(last_psi + 1);
      }
      return -(2.0 * psi_1 - psi_a - psi_b);
    };
    // sum (a)_n (b)_n/(n!)^2 [2psi(n+1) - psi(a+n) - psi(b+n) - log w] w^n
    return -std::exp(lgc) * rgamma(a) * rgamma(b) * log_series(coef_n, bracket, w);
  }
  if (m > 0) {
    cplx finite = 0.0, t = 1.0, wn = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += t * wn;
      t *= (a + double(n)) * (b + double(n)) / (double(n + 1) * (double(1 - m) + double(n)));
      wn *= w;
    }
    cplx first = std::exp(std::lgamma(double(m)) + lgc) * rgamma(a + double(m)) * rgamma(b + double(m)) * finite;
    cplx am = a + double(m), bm = b + double(m);
    cplx coef = 1.0 / std::tgamma(double(m + 1));
    int last = 0;
    auto coef_n = [&](int n) {
      for (; last < n; ++last)
        coef *= (am + double(last)) * (bm + double(last)) / (double(last + 1) * double(last + m + 1));
      return coef;
    };
    cplx psi_1 = digamma(1.0), psi_m1 = digamma(double(m + 1)), psi_a = digamma(am), psi_b = digamma(bm);
    int last_psi = 0;
    auto bracket = [&](int n) {
      for (; last_psi < n; ++last_psi) {
        psi_1 += 1.0 / double(last_psi + 1);
        psi_m1 += 1.0 / double(last_psi + m + 1);
        psi_a += 1.0 / (am + double(last_psi));
        psi_b += 1.0 / (bm + double(last_psi));
      }
      return -psi_1 - psi_m1 + psi_a + psi_b;
    };
    cplx second = std::pow(-w, double(m)) * std::exp(lgc) * rgamma(a) * rgamma(b) * log_series(coef_n, bracket, w);
    return first - second;
  }
  int k = -m;
  cplx finite = 0.0, t = 1.0, wn = 1.0;
  cplx ak = a - double(k), bk = b - double(k);
  for (int n = 0; n < k; ++n) {
    finite += t * wn;
    t *= (ak + double(n)) * (bk + double(n)) / (double(n + 1) * (double(1 - k) + double(n)));
    wn *= w;
  }
  cplx first = std::exp(std::lgamma(double(k)) + lgc) * rgamma(a) * rgamma(b) * std::pow(w, -double(k)) * finite;
  cplx coef = 1.0 / std::tgamma(double(k + 1));
  int last = 0;
  auto coef_n = [&](int n) {
    for (; last < n; ++last)
      coef *= (a + double(last)) * (b + double(last)) / (double(last + 1) * double(last + k + 1));
    return coef;
  };
  cplx psi_1 = digamma(1.0), psi_k1 = digamma(double(k + 1)), psi_a = digamma(a), psi_b = digamma(b);
  int last_psi = 0;
  auto bracket = [&](int n) {
    for (; last_psi < n; ++last_psi) {
      psi_1 += 1.0 / double(last_psi + 1);
      psi_k1 += 1.0 / double(last_psi + k + 1);
      psi_a += 1.0 / (a + double(last_psi));
      psi_b += 1.0 / (b + double(last_psi));
    }
    return -psi_1 - psi_k1 + psi_a + psi_b;
  };
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  cplx second = sign * std::exp(lgc) * rgamma(ak) * rgamma(bk) * log_series(coef_n, bracket, w);
  return first - second;
}

}  // namespace

cplx hyp2f1_near_one(cplx a, cplx b, cplx c, cplx w) {
  a = snap_integer(a);
  b = snap_integer(b);
  c = snap_integer(c);
  if (terminating(a) || terminating(b)) return power_series(a, b, c, 1.0 - w);
  if (is_nonpositive_integer(c)) throw Error(ErrorKind::SeriesDivergence, "c is a non-positive integer");
  return connection(a, b, c, w);
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  a = snap_integer(a);
  b = snap_integer(b);
  c = snap_integer(c);
  if (terminating(a) || terminating(b) || std::abs(z) <= kRegion) return power_series(a, b, c, z);
  if (z.imag() == 0 && z.real() > 1)
    throw Error(ErrorKind::ConnectionFormulaFailure, "z on the branch cut (1, inf)");
  if (std::abs(1.0 - z) <= kRegion) return hyp2f1_near_one(a, b, c, 1.0 - z);
  cplx zp = z / (z - 1.0);
  if (std::abs(zp) <= kInnerRegion) return std::pow(1.0 - z, -a) * power_series(a, c - b, c, zp);
  if (std::abs(z) <= kInnerRegion) return power_series(a, b, c, z);
  if (std::abs(1.0 - z) <= kInnerRegion) return hyp2f1_near_one(a, b, c, 1.0 - z);
  throw Error(ErrorKind::ConnectionFormulaFailure, "z outside the implemented regions");
}

RankOneParameters rank_one_parameters(cplx lambda, double p, double q) {
  double shift = p / 4 + q / 2;
  return {lambda + shift, -lambda + shift, 0.5 + p / 2 + q / 2};
}

cplx rank_one_phi(cplx lambda, double p, double q, double eps) {
  auto r = rank_one_parameters(lambda, p, q);
  double s = std::sin(M_PI * eps / 2);
  if (s * s > 0.75) return hyp2f1(r.a, r.b, r.c, 1.0 - s * s);
  return hyp2f1_near_one(r.a, r.b, r.c, s * s);
}

std::vector<double> FitGrid::values() const {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    double t = points == 1 ? 0.0 : double(i) / (points - 1);
    out.push_back(eps_max * std::pow(eps_min / eps_max, t));
  }
  return out;
}

namespace {

struct LineFit {
  double slope = 0, intercept = 0, rms = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  double n = x.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LineFit f;
  double det = n * sxx - sx * sx;
  f.slope = det == 0 ? 0 : (n * sxy - sx * sy) / det;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - f.slope * x[i] - f.intercept;
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

FitResult fit_exponent(const std::vector<double>& eps, const std::vector<double>& abs_phi) {
  FitResult r;
  r.grid = eps;
  std::vector<double> lx, ly, ll;
  for (size_t i = 0; i < eps.size(); ++i) {
    if (!(abs_phi[i] > 0) || !std::isfinite(abs_phi[i]))
      throw Error(ErrorKind::SeriesDivergence, "non-finite or zero value on the fit grid");
    lx.push_back(std::log(eps[i]));
    ly.push_back(std::log(abs_phi[i]));
    ll.push_back(std::abs(std::log(eps[i])));
    r.max_abs = std::max(r.max_abs, abs_phi[i]);
  }
  auto power = least_squares(lx, ly);
  r.power_residual = power.rms;

  // eps^s (A + B|log eps|): linear in (A, B) for fixed s, relative residual.
  double best_a = 0, best_b = 0;
  auto log_model = [&](double s) {
    std::vector<double> g;
    for (size_t i = 0; i < eps.size(); ++i) g.push_back(std::exp(ly[i] - s * lx[i]));
    auto f = least_squares(ll, g);
    double ss = 0;
    for (size_t i = 0; i < g.size(); ++i) {
      double rel = (g[i] - f.intercept - f.slope * ll[i]) / g[i];
      ss += rel * rel;
    }
    best_a = f.intercept;
    best_b = f.slope;
    return std::sqrt(ss / g.size());
  };
  // coarse scan first, the residual is not unimodal in s
  double lo = power.slope - 1, step = 0.01, best_s = lo, best_r = log_model(lo);
  for (double s = lo + step; s <= power.slope + 1 + 1e-12; s += step) {
    double v = log_model(s);
    if (v < best_r) best_r = v, best_s = s;
  }
  auto [s1, r1] = boost::math::tools::brent_find_minima(log_model, best_s - step, best_s + step, 40);
  log_model(s1);
  r.log_residual = r1;
  double lmax = *std::max_element(ll.begin(), ll.end());
  r.log_share = std::abs(best_b) * lmax / (std::abs(best_a) + std::abs(best_b) * lmax);

  bool log_term = r.power_residual > 1e-3 && r.log_residual < r.power_residual / 10 && r.log_share > 0.5;
  if (log_term) {
    r.log_degree_estimate = 1;
    r.exponent_estimate = s1;
    r.residual = r.log_residual;
  } else {
    r.exponent_estimate = power.slope;
    r.residual = r.power_residual;
  }
  return r;
}

FitResult exponent_fit(double p, double q, cplx lambda, const FitGrid& grid) {
  auto eps = grid.values();
  std::vector<double> vals;
  for (double e : eps) vals.push_back(std::abs(rank_one_phi(lambda, p, q, e)));
  auto r = fit_exponent(eps, vals);
  auto params = rank_one_parameters(lambda, p, q);
  bool term = is_nonpositive_integer(snap_integer(params.a)) || is_nonpositive_integer(snap_integer(params.b));
  r.expected_exponent = (q > 1 && !term) ? 1 - q : 0;
  return r;
}

}  // namespace crown

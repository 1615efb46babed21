#include "crown/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "crown/errors.hpp"

namespace crown {

namespace {

template <class T, unsigned Points, class F>
T run_rule(const F& f, double a, double b, const QuadratureSpec& spec, QuadratureEstimate& est) {
  return boost::math::quadrature::gauss_kronrod<double, Points>::integrate(f, a, b, spec.max_depth, spec.rel_tol,
                                                                           &est.error, &est.l1);
}

template <class T, class F>
T run(const F& f, double a, double b, const QuadratureSpec& spec, QuadratureEstimate* out) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    throw Error(ErrorKind::QuadratureFailure, "interval must be finite");
  QuadratureEstimate est;
  T value;
  if (spec.rule == "gauss-kronrod-15") {
    value = run_rule<T, 15>(f, a, b, spec, est);
  } else if (spec.rule == "gauss-kronrod-31") {
    value = run_rule<T, 31>(f, a, b, spec, est);
  } else {
    throw Error(ErrorKind::QuadratureFailure, "unknown rule " + spec.rule);
  }
  if (!std::isfinite(std::abs(value)) || est.error > std::max(spec.abs_tol, spec.rel_tol * est.l1))
    throw Error(ErrorKind::QuadratureFailure,
                "error estimate " + std::to_string(est.error) + " above tolerance on [" + std::to_string(a) + ", " +
                    std::to_string(b) + "]");
  if (out) *out = est;
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec,
                 QuadratureEstimate* estimate) {
  return run<double>(f, a, b, spec, estimate);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                                       const QuadratureSpec& spec, QuadratureEstimate* estimate) {
  return run<std::complex<double>>(f, a, b, spec, estimate);
}

}  // namespace crown

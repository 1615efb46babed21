#include "crown/special.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_psi.h>

#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>

#include "crown/errors.hpp"

namespace crown {

namespace {

void quiet_gsl() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

std::string describe(cplx z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

}  // namespace

double pole_distance(cplx z) {
  if (z.real() > 0.5) return std::numeric_limits<double>::infinity();
  double n = std::round(z.real());
  return std::abs(z - cplx(n, 0));
}

bool is_nonpositive_integer(cplx z, double eps) { return pole_distance(z) < eps; }

cplx log_gamma(cplx z) {
  quiet_gsl();
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::PoleProximity, "log Gamma at pole " + describe(z));
  gsl_sf_result lnr, arg;
  int status = gsl_sf_lngamma_complex_e(z.real(), z.imag(), &lnr, &arg);
  if (status != GSL_SUCCESS)
    throw Error(ErrorKind::PoleProximity, "log Gamma failed at " + describe(z) + ": " + gsl_strerror(status));
  return {lnr.val, arg.val};
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
  quiet_gsl();
  if (is_nonpositive_integer(z)) throw Error(ErrorKind::PoleProximity, "digamma at pole " + describe(z));
  gsl_sf_result re, im;
  int status = gsl_sf_complex_psi_e(z.real(), z.imag(), &re, &im);
  if (status != GSL_SUCCESS)
    throw Error(ErrorKind::PoleProximity, "digamma failed at " + describe(z) + ": " + gsl_strerror(status));
  return {re.val, im.val};
}

}  // namespace crown

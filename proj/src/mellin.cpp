#include "fock/mellin.hpp"

#include "fock/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fock {

MellinValue mellin_weighted(const RadialProfile &v, SobolevOrder s, double zeta,
                            const QuadratureSpec &spec) {
  const double alpha = zeta + 2.0 * s.value();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "mellin_weighted: zeta + 2s must be positive (holomorphy half-plane), "
        << "got zeta = " << zeta << ", s = " << s.value();
    throw DomainError(msg.str());
  }
  if (v.is_zero())
    return {zeta, 0.0, 0.0};

  const QuadratureSpec covered = spec.covering(alpha, v.growth());
  const IntegralResult r = gaussian_weighted_integral(
      [&v](double t) { return v(t); }, alpha, covered, v.growth());
  return {zeta, r.value * std::numbers::inv_pi,
          r.abs_error * std::numbers::inv_pi};
}

cplx mellin_monomial_closed_form(double p, SobolevOrder s, double zeta) {
  const double arg = 0.5 * (zeta + p + 2.0 * s.value());
  if (!(arg > 0.0)) {
    std::ostringstream msg;
    msg << "mellin_monomial_closed_form: Gamma argument " << arg
        << " is not positive";
    throw DomainError(msg.str());
  }
  return std::exp(log_gamma(arg)) / (2.0 * std::numbers::pi);
}

} // namespace fock

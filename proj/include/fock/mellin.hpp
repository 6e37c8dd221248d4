#pragma once

#include "fock/fock_space.hpp"
#include "fock/profile.hpp"

namespace fock {

/// M[v G_s](argument) with an absolute error estimate.
struct MellinValue {
  double argument = 0.0;
  cplx value;
  double abs_error_estimate = 0.0;
};

/// M[v G_s](zeta) = (1/pi) * integral of v(t) e^{-t^2} t^{zeta + 2s - 1} over (0, inf).
///
/// Defined on the half-plane zeta + 2s > 0 (DomainError outside). The tail
/// cutoff of `spec` is widened to cover the exponent plus the profile's
/// declared growth. Real arguments only.
MellinValue mellin_weighted(const RadialProfile &v, SobolevOrder s, double zeta,
                            const QuadratureSpec &spec);

/// Closed form for v(r) = r^p: Gamma((zeta + p + 2s) / 2) / (2 pi).
cplx mellin_monomial_closed_form(double p, SobolevOrder s, double zeta);

} // namespace fock

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fock {

using cplx = std::complex<double>;

/// ln Gamma(x) for real x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Bound on the relative error of exp(log_gamma(x)) as a Gamma value.
double gamma_relative_error(double x);

/// Gamma(a) / Gamma(b), evaluated in the log domain so it stays finite even
/// where Gamma(a) and Gamma(b) individually overflow.
double gamma_ratio(double a, double b);

/// Gauss rule with nodes/weights on a reference interval.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss rule for the weight y^b on [0, 1], b > -1 (shifted
/// Gauss-Jacobi with parameters (0, b)), via Golub-Welsch.
QuadratureRule gauss_jacobi_unit(int n, double b);

/// Declared polynomial growth |f(t)| <= constant * (1 + t)^exponent.
struct GrowthBound {
  double constant = 1.0;
  double exponent = 0.0;
};

/// Controls for gaussian_weighted_integral.
struct QuadratureSpec {
  int node_count = 24;      ///< Gauss order per panel (>= 2)
  double tail_cutoff = 8.0; ///< integrate over [0, tail_cutoff]
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  int max_refinements = 8; ///< panel doublings before giving up

  /// Throws DomainError if a field violates its invariant.
  void validate() const;

  /// Copy whose tail_cutoff is large enough for integrands bounded by
  /// growth(t) t^(alpha_max - 1) e^{-t^2} (never smaller than the current
  /// cutoff).
  QuadratureSpec covering(double alpha_max, GrowthBound growth = {}) const;
};

/// Smallest cutoff R (on a 1/8 grid) with exp(-R^2) R^alpha_max < abs_tol/10,
/// R^2 past the integrand's peak, and the growth-aware tail bound below
/// abs_tol/10.
double required_tail_cutoff(double alpha_max, double abs_tol,
                            GrowthBound growth = {});

struct IntegralResult {
  cplx value;
  double abs_error = 0.0; ///< refinement + rounding + tail estimate
  int nodes_used = 0;
};

using RadialFunction = std::function<cplx(double)>;

/// Integral of f(t) e^{-t^2} t^(alpha-1) over (0, inf).
///
/// The first panel absorbs t^(alpha-1) into a Gauss-Jacobi weight, so any
/// alpha > 0 is handled without loss of order at the origin; the remaining
/// panels use Gauss-Legendre. Panels are doubled until two successive levels
/// agree to max(abs_tol, rel_tol*|I|). Throws AccuracyError carrying the
/// estimate when the refinement budget runs out.
IntegralResult gaussian_weighted_integral(const RadialFunction &f, double alpha,
                                          const QuadratureSpec &spec,
                                          GrowthBound growth = {});

} // namespace fock

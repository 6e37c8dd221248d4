#pragma once

// Brute-force reference computations used by tests and the self-test suite.
// They share no code path with the Mellin/Gauss-Jacobi machinery: plain
// composite trapezoid and Simpson sums on uniform grids.

#include "fock/operators.hpp"
#include "fock/special_functions.hpp"

#include <functional>

namespace fock::oracle {

/// Trapezoid sum of f(t) e^{-t^2} t^{alpha-1} over [0, R] with `steps` panels.
/// Intended for alpha >= 1 where the integrand is continuous at 0.
double trapezoid_gaussian_moment(const std::function<double(double)> &f, double alpha,
                                 double R, int steps);

/// Partial sum of sum_{n < terms} x^n / Gamma(s + n + 1), term by term from
/// lgamma (no recurrence).
cplx kernel_partial_sum(cplx x, double s, int terms);

/// <u e_m, e_n>_s by composite Simpson in r on [0, R] times the trapezoid rule
/// in theta (exact for trigonometric polynomials of degree < angle_steps).
cplx polar_inner_product(const std::function<cplx(cplx)> &u, double s, int m, int n,
                         double R, int radial_steps, int angle_steps);

/// N x N matrix of polar_inner_product entries.
ComplexMatrix brute_force_toeplitz(const std::function<cplx(cplx)> &u, double s, int N,
                                   double R = 12.0, int radial_steps = 2400,
                                   int angle_steps = 32);

/// Integral of |z|^{2n} G_s(z) over the disk |z| <= R (composite Simpson in r;
/// the angular integral is exact).
double disk_moment(int n, double s, double R, int radial_steps);

} // namespace fock::oracle

#include "fock/oracles.hpp"

#include <cmath>
#include <numbers>

namespace fock::oracle {

double trapezoid_gaussian_moment(const std::function<double(double)> &f, double alpha,
                                 double R, int steps) {
  const double h = R / steps;
  auto g = [&](double t) {
    if (t == 0.0)
      return alpha == 1.0 ? f(0.0) : 0.0;
    return f(t) * std::exp(-t * t) * std::pow(t, alpha - 1.0);
  };
  double sum = 0.5 * (g(0.0) + g(R));
  for (int i = 1; i < steps; ++i)
    sum += g(i * h);
  return sum * h;
}

cplx kernel_partial_sum(cplx x, double s, int terms) {
  cplx sum = 0.0;
  for (int n = 0; n < terms; ++n)
    sum += std::pow(x, n) / std::tgamma(s + n + 1.0);
  return sum;
}

cplx polar_inner_product(const std::function<cplx(cplx)> &u, double s, int m, int n,
                         double R, int radial_steps, int angle_steps) {
  if (radial_steps % 2)
    ++radial_steps;
  const double h = R / radial_steps;
  const double dtheta = 2.0 * std::numbers::pi / angle_steps;
  const double norm = 1.0 / std::sqrt(std::tgamma(s + m + 1.0) * std::tgamma(s + n + 1.0));
  cplx total = 0.0;
  for (int i = 0; i <= radial_steps; ++i) {
    const double r = i * h;
    if (r == 0.0 && (m + n + 2.0 * s) > 0.0)
      continue; // integrand vanishes at the origin
    const double simpson = (i == 0 || i == radial_steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    // e_m(z) conj(e_n(z)) G_s(z) r = r^{m+n+2s+1} e^{i(m-n)theta} e^{-r^2} / pi
    const double radial = std::pow(r, m + n + 2.0 * s + 1.0) * std::exp(-r * r) /
                          std::numbers::pi;
    cplx ring = 0.0;
    for (int k = 0; k < angle_steps; ++k) {
      const double theta = k * dtheta;
      ring += u(std::polar(r, theta)) * std::polar(1.0, (m - n) * theta);
    }
    total += simpson * radial * ring * dtheta;
  }
  return total * (h / 3.0) * norm;
}

ComplexMatrix brute_force_toeplitz(const std::function<cplx(cplx)> &u, double s, int N,
                                   double R, int radial_steps, int angle_steps) {
  ComplexMatrix out(N, N);
  for (int n = 0; n < N; ++n)
    for (int m = 0; m < N; ++m)
      out(n, m) = polar_inner_product(u, s, m, n, R, radial_steps, angle_steps);
  return out;
}

double disk_moment(int n, double s, double R, int radial_steps) {
  if (radial_steps % 2)
    ++radial_steps;
  const double h = R / radial_steps;
  double total = 0.0;
  for (int i = 1; i <= radial_steps; ++i) {
    const double r = i * h;
    const double simpson = (i == radial_steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    total += simpson * std::pow(r, 2.0 * n + 2.0 * s + 1.0) * std::exp(-r * r);
  }
  // (1/pi) * 2 pi * radial integral
  return 2.0 * total * h / 3.0;
}

} // namespace fock::oracle

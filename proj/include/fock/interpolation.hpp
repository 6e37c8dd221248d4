#pragma once

#include <complex>
#include <vector>

namespace fock {

/// Complex-valued cubic spline with not-a-knot end conditions.
///
/// Reproduces cubic polynomials exactly. Outside the knot range the end
/// pieces are continued polynomially. With fewer than four knots it falls
/// back to the interpolating polynomial of the available points.
class CubicSpline {
public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> knots, std::vector<std::complex<double>> values);

  std::complex<double> operator()(double x) const;

  const std::vector<double> &knots() const { return x_; }
  const std::vector<std::complex<double>> &values() const { return y_; }

private:
  std::vector<double> x_;
  std::vector<std::complex<double>> y_;
  std::vector<std::complex<double>> m_; // second derivatives at knots
};

} // namespace fock

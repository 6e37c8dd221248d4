#include "fock/interpolation.hpp"

#include "fock/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>

namespace fock {

CubicSpline::CubicSpline(std::vector<double> knots,
                         std::vector<std::complex<double>> values)
    : x_(std::move(knots)), y_(std::move(values)) {
  if (x_.size() != y_.size() || x_.empty())
    throw PreconditionError("CubicSpline: knots and values must be nonempty and equal length");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]))
      throw PreconditionError("CubicSpline: knots must be strictly increasing");

  const int n = static_cast<int>(x_.size());
  m_.assign(n, 0.0);
  if (n < 4)
    return;

  // Unknowns: second derivatives M_0..M_{n-1}.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs_re = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd rhs_im = Eigen::VectorXd::Zero(n);
  std::vector<double> h(n - 1);
  for (int i = 0; i + 1 < n; ++i)
    h[i] = x_[i + 1] - x_[i];

  // not-a-knot: third derivative continuous across the second and
  // second-to-last knots
  A(0, 0) = h[1];
  A(0, 1) = -(h[0] + h[1]);
  A(0, 2) = h[0];
  A(n - 1, n - 3) = h[n - 2];
  A(n - 1, n - 2) = -(h[n - 3] + h[n - 2]);
  A(n - 1, n - 1) = h[n - 3];
  for (int i = 1; i + 1 < n; ++i) {
    A(i, i - 1) = h[i - 1];
    A(i, i) = 2.0 * (h[i - 1] + h[i]);
    A(i, i + 1) = h[i];
    const auto r = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
    rhs_re(i) = r.real();
    rhs_im(i) = r.imag();
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const Eigen::VectorXd m_re = lu.solve(rhs_re);
  const Eigen::VectorXd m_im = lu.solve(rhs_im);
  for (int i = 0; i < n; ++i)
    m_[i] = {m_re(i), m_im(i)};
}

std::complex<double> CubicSpline::operator()(double x) const {
  const int n = static_cast<int>(x_.size());
  if (n == 0)
    return 0.0;
  if (n < 4) {
    // Lagrange form on the few points available.
    std::complex<double> sum = 0.0;
    for (int i = 0; i < n; ++i) {
      double basis = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != i)
          basis *= (x - x_[k]) / (x_[i] - x_[k]);
      sum += basis * y_[i];
    }
    return sum;
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  int i = static_cast<int>(it - x_.begin()) - 1;
  i = std::clamp(i, 0, n - 2);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * (h * h / 6.0);
}

} // namespace fock

#include "fock/special_functions.hpp"

#include "fock/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fock {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Rounding floor attached to every quadrature sum, in units of eps * sum|terms|.
constexpr double kRoundingFactor = 32.0;

// Upper bound for the integral of (1+t)^m t^(alpha-1) e^{-t^2} over (R, inf)
// scaled by the growth constant. Uses (1+t)^m <= (2t)^m for t >= 1 and one
// integration by parts.
double tail_estimate(double alpha, double R, GrowthBound growth) {
  if (R < 1.0)
    return std::numeric_limits<double>::infinity();
  const double beta = alpha + growth.exponent;
  const double log_lead = std::log(growth.constant) +
                          growth.exponent * std::numbers::ln2 +
                          (beta - 2.0) * std::log(R) - R * R;
  double denom = 2.0;
  if (beta > 2.0) {
    denom = 2.0 - (beta - 2.0) / (R * R);
    if (denom <= 0.0)
      return std::numeric_limits<double>::infinity();
  }
  return std::exp(log_lead) / denom;
}

} // namespace

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    std::ostringstream msg;
    msg << "log_gamma: argument must be finite and positive, got " << x;
    throw DomainError(msg.str());
  }
  // lgamma_r is the reentrant form; std::lgamma may write the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double gamma_relative_error(double x) {
  return 4.0 * kEps * std::max(1.0, std::abs(log_gamma(x)));
}

double gamma_ratio(double a, double b) {
  if (a == b) {
    log_gamma(a); // still validates the argument
    return 1.0;
  }
  return std::exp(log_gamma(a) - log_gamma(b));
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1)
    throw DomainError("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) <= 2.0 * kEps)
        break;
    }
    // one more pass so the derivative matches the converged node
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_jacobi_unit(int n, double b) {
  if (n < 1)
    throw DomainError("gauss_jacobi_unit: need at least one node");
  if (!(b > -1.0) || !std::isfinite(b))
    throw DomainError("gauss_jacobi_unit: exponent must exceed -1");

  // Monic Jacobi recurrence for (1-x)^0 (1+x)^b on [-1, 1].
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  diag(0) = b / (b + 2.0);
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + b;
    diag(k) = (b * b) / (c * (c + 2.0));
    const double beta = 4.0 * k * k * (k + b) * (k + b) /
                        (c * c * (c + 1.0) * (c - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.5 * (1.0 + diag(0));
    rule.weights[0] = 1.0 / (b + 1.0);
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
  const auto &vals = solver.eigenvalues();
  const auto &vecs = solver.eigenvectors();
  // Mass of y^b on [0, 1] is 1/(b+1).
  const double mass = 1.0 / (b + 1.0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + vals(i));
    rule.weights[i] = mass * vecs(0, i) * vecs(0, i);
  }
  return rule;
}

void QuadratureSpec::validate() const {
  if (node_count < 2)
    throw DomainError("QuadratureSpec: node_count must be >= 2");
  if (!(tail_cutoff > 0.0) || !std::isfinite(tail_cutoff))
    throw DomainError("QuadratureSpec: tail_cutoff must be positive");
  if (!(abs_tol > 0.0))
    throw DomainError("QuadratureSpec: abs_tol must be positive");
  if (!(rel_tol > 0.0))
    throw DomainError("QuadratureSpec: rel_tol must be positive");
  if (max_refinements < 1)
    throw DomainError("QuadratureSpec: max_refinements must be >= 1");
}

double required_tail_cutoff(double alpha_max, double abs_tol,
                            GrowthBound growth) {
  const double a = std::max(alpha_max, 1.0);
  const double target = std::log(abs_tol / 10.0);
  double R = std::max(1.0, std::ceil(8.0 * std::sqrt(a)) / 8.0);
  while (a * std::log(R) - R * R >= target || R * R <= a + growth.exponent ||
         tail_estimate(alpha_max, R, growth) >= abs_tol / 10.0)
    R += 0.125;
  return R;
}

QuadratureSpec QuadratureSpec::covering(double alpha_max, GrowthBound growth) const {
  QuadratureSpec out = *this;
  out.tail_cutoff =
      std::max(tail_cutoff, required_tail_cutoff(alpha_max, abs_tol, growth));
  return out;
}

IntegralResult gaussian_weighted_integral(const RadialFunction &f, double alpha,
                                          const QuadratureSpec &spec,
                                          GrowthBound growth) {
  spec.validate();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    std::ostringstream msg;
    msg << "gaussian_weighted_integral: exponent alpha must be positive, got "
        << alpha;
    throw DomainError(msg.str());
  }

  const int q = spec.node_count;
  const double R = spec.tail_cutoff;
  const QuadratureRule legendre = gauss_legendre(q);
  const QuadratureRule jacobi = gauss_jacobi_unit(q, alpha - 1.0);

  auto level_sum = [&](int panels, double &abs_sum) {
    const double h = R / panels;
    cplx sum = 0.0;
    abs_sum = 0.0;
    // First panel: t^(alpha-1) is part of the weight.
    const double scale = std::exp(alpha * std::log(h));
    for (int i = 0; i < q; ++i) {
      const double t = jacobi.nodes[i] * h;
      const cplx v = f(t) * (std::exp(-t * t) * jacobi.weights[i] * scale);
      sum += v;
      abs_sum += std::abs(v);
    }
    for (int p = 1; p < panels; ++p) {
      const double mid = (p + 0.5) * h;
      const double half = 0.5 * h;
      for (int i = 0; i < q; ++i) {
        const double t = mid + half * legendre.nodes[i];
        const double w = half * legendre.weights[i] *
                         std::exp((alpha - 1.0) * std::log(t) - t * t);
        const cplx v = f(t) * w;
        sum += v;
        abs_sum += std::abs(v);
      }
    }
    return sum;
  };

  int panels = std::max(2, static_cast<int>(std::ceil(R)));
  double abs_sum = 0.0;
  cplx previous = level_sum(panels, abs_sum);
  int nodes = panels * q;
  double diff = std::numeric_limits<double>::infinity();
  cplx current = previous;
  for (int level = 1; level <= spec.max_refinements; ++level) {
    panels *= 2;
    current = level_sum(panels, abs_sum);
    nodes += panels * q;
    diff = std::abs(current - previous);
    const double rounding = kRoundingFactor * kEps * abs_sum;
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(current));
    if (diff <= std::max(tol, rounding)) {
      const double tail = tail_estimate(alpha, R, growth);
      if (tail > tol) {
        std::ostringstream msg;
        msg << "gaussian_weighted_integral: tail beyond cutoff " << R
            << " is estimated at " << tail << "; raise tail_cutoff";
        throw AccuracyError(msg.str(), tail);
      }
      return {current, std::max(diff, rounding) + tail, nodes};
    }
    previous = current;
  }
  std::ostringstream msg;
  msg << "gaussian_weighted_integral: no convergence after " << nodes
      << " nodes (estimate " << diff << ")";
  throw AccuracyError(msg.str(), diff);
}

} // namespace fock

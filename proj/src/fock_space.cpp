#include "fock/fock_space.hpp"

#include "fock/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fock {

SobolevOrder::SobolevOrder(double s) : s_(s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    std::ostringstream msg;
    msg << "SobolevOrder: s must be finite and nonnegative, got " << s;
    throw DomainError(msg.str());
  }
}

double density(cplx z, SobolevOrder s) {
  const double r2 = std::norm(z);
  if (r2 == 0.0)
    return s.value() == 0.0 ? std::numbers::inv_pi : 0.0;
  return std::exp(s.value() * std::log(r2) - r2) * std::numbers::inv_pi;
}

double basis_norm_sq(int n, SobolevOrder s) {
  if (n < 0)
    throw DomainError("basis_norm_sq: index must be nonnegative");
  return std::exp(log_gamma(s.value() + n + 1.0));
}

KernelValue kernel_eval(cplx z, cplx w, SobolevOrder s, double abs_tol,
                        int max_terms) {
  if (!(abs_tol > 0.0))
    throw DomainError("kernel_eval: abs_tol must be positive");
  const cplx x = z * std::conj(w);
  const double ax = std::abs(x);
  const double sv = s.value();

  cplx term = std::exp(-log_gamma(sv + 1.0));
  cplx sum = term;
  int n = 0; // index of the last term added
  for (;;) {
    // Ratio of |term_{n+2}| to |term_{n+1}|, which bounds all later ratios.
    const double next_ratio = ax / (sv + n + 2.0);
    if (next_ratio <= 0.5) {
      const double next = std::abs(term) * ax / (sv + n + 1.0);
      const double tail = next / (1.0 - next_ratio);
      if (tail <= abs_tol)
        return {sum, n + 1, tail};
    }
    if (n + 1 >= max_terms) {
      std::ostringstream msg;
      msg << "kernel_eval: |z conj(w)| = " << ax << " needs more than "
          << max_terms << " series terms";
      throw ResourceError(msg.str());
    }
    term *= x / (sv + n + 1.0);
    sum += term;
    ++n;
  }
}

double kernel_norm(cplx z, SobolevOrder s, double abs_tol, int max_terms) {
  return std::sqrt(kernel_eval(z, z, s, abs_tol, max_terms).value.real());
}

} // namespace fock

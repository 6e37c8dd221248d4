#pragma once

#include "fock/special_functions.hpp"

namespace fock {

/// Order s >= 0 of the Fock-Sobolev space F^{2,s}; selects the density
/// G_s(z) = |z|^{2s} e^{-|z|^2} / pi.
class SobolevOrder {
public:
  explicit SobolevOrder(double s);
  double value() const noexcept { return s_; }
  friend bool operator==(SobolevOrder, SobolevOrder) = default;

private:
  double s_;
};

/// G_s(z) = |z|^{2s} e^{-|z|^2} / pi.
double density(cplx z, SobolevOrder s);

/// ||z^n||^2 in L^2(G_s dA), i.e. Gamma(s + n + 1).
double basis_norm_sq(int n, SobolevOrder s);

struct KernelValue {
  cplx value;
  int truncation_order = 0; ///< number of series terms summed
  double tail_bound = 0.0;  ///< bound on the absolute truncation error
};

/// Default cap on series terms for kernel_eval.
inline constexpr int kKernelTermCap = 512;

/// Reproducing kernel K^s(z, w) = sum_n (z conj(w))^n / Gamma(s + n + 1),
/// summed until a geometric tail bound drops below abs_tol. Throws
/// ResourceError when more than max_terms terms would be needed.
KernelValue kernel_eval(cplx z, cplx w, SobolevOrder s, double abs_tol,
                        int max_terms = kKernelTermCap);

/// ||K^s_z||_s = sqrt(K^s(z, z)).
double kernel_norm(cplx z, SobolevOrder s, double abs_tol,
                   int max_terms = kKernelTermCap);

} // namespace fock

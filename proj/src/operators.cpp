#include "fock/operators.hpp"

#include "fock/errors.hpp"
#include "fock/mellin.hpp"
#include "fock/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fock {

TruncatedOperator TruncatedOperator::identity(int n, SobolevOrder s, std::string label) {
  if (n < 1)
    throw PreconditionError("TruncatedOperator: size must be positive");
  return {n, s, ComplexMatrix::Identity(n, n), 0, n - 1, std::move(label), 0.0};
}

TruncatedOperator TruncatedOperator::zero(int n, SobolevOrder s, std::string label) {
  if (n < 1)
    throw PreconditionError("TruncatedOperator: size must be positive");
  return {n, s, ComplexMatrix::Zero(n, n), 0, n - 1, std::move(label), 0.0};
}

namespace {

struct EntryTask {
  int j;
  int m;
};

struct EntryValue {
  cplx value;
  double error;
};

} // namespace

TruncatedOperator toeplitz_matrix(const SymbolSpec &spec, SobolevOrder s, int N,
                                  const QuadratureSpec &quad) {
  if (N < 1)
    throw PreconditionError("toeplitz_matrix: N must be positive");
  quad.validate();

  std::vector<EntryTask> tasks;
  for (const auto &[j, v] : spec.modes())
    for (int m = std::max(0, -j); m < N && m + j < N; ++m)
      tasks.push_back({j, m});

  std::vector<EntryValue> values(tasks.size());
  const double sv = s.value();
  parallel_for(tasks.size(), [&](std::size_t idx) {
    const auto [j, m] = tasks[idx];
    const RadialProfile &v = spec.modes().at(j);
    MellinValue mv;
    try {
      mv = mellin_weighted(v, s, 2.0 * m + j + 2.0, quad);
    } catch (const AccuracyError &e) {
      std::ostringstream msg;
      msg << "toeplitz_matrix: entry for mode j = " << j << ", m = " << m
          << " of '" << spec.name() << "': " << e.what();
      throw AccuracyError(msg.str(), e.error_estimate());
    }
    const double norm = std::exp(-0.5 * (log_gamma(sv + m + 1.0) +
                                         log_gamma(sv + m + j + 1.0)));
    const double scale = 2.0 * std::numbers::pi * norm;
    values[idx] = {mv.value * scale, mv.abs_error_estimate * scale};
  });

  TruncatedOperator out;
  out.size = N;
  out.s = s;
  out.entries = ComplexMatrix::Zero(N, N);
  out.exact_band = spec.max_abs_mode();
  out.exact_window = N - 1;
  out.label = spec.name();
  for (std::size_t idx = 0; idx < tasks.size(); ++idx) {
    const auto [j, m] = tasks[idx];
    out.entries(m + j, m) = values[idx].value;
    out.abs_error = std::max(out.abs_error, values[idx].error);
  }
  return out;
}

std::vector<cplx> radial_eigenvalues(const RadialProfile &v0, SobolevOrder s, int N,
                                     const QuadratureSpec &quad) {
  if (N < 1)
    throw PreconditionError("radial_eigenvalues: N must be positive");
  std::vector<cplx> lambda(N);
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t k) {
    const double zeta = 2.0 * k + 2.0;
    const MellinValue num = mellin_weighted(v0, s, zeta, quad);
    lambda[k] = num.value / mellin_monomial_closed_form(0.0, s, zeta);
  });
  return lambda;
}

namespace {

void check_compatible(const TruncatedOperator &A, const TruncatedOperator &B,
                      const char *who) {
  if (A.size != B.size || !(A.s == B.s)) {
    std::ostringstream msg;
    msg << who << ": operands differ in size (" << A.size << " vs " << B.size
        << ") or order s (" << A.s.value() << " vs " << B.s.value() << ")";
    throw PreconditionError(msg.str());
  }
}

int composed_window(const TruncatedOperator &A, const TruncatedOperator &B) {
  return std::max(-1, std::min(A.exact_window, B.exact_window) -
                          (A.exact_band + B.exact_band));
}

double composed_error(const TruncatedOperator &A, const TruncatedOperator &B) {
  // Each entry of AB sums at most (2 band + 1) products.
  const double terms = 2.0 * std::min(A.exact_band, B.exact_band) + 1.0;
  const double a_max = A.entries.cwiseAbs().maxCoeff();
  const double b_max = B.entries.cwiseAbs().maxCoeff();
  return terms * (A.abs_error * b_max + B.abs_error * a_max + A.abs_error * B.abs_error);
}

} // namespace

TruncatedOperator product(const TruncatedOperator &A, const TruncatedOperator &B) {
  check_compatible(A, B, "product");
  TruncatedOperator out;
  out.size = A.size;
  out.s = A.s;
  out.entries = A.entries * B.entries;
  out.exact_band = A.exact_band + B.exact_band;
  out.exact_window = composed_window(A, B);
  out.label = A.label + "*" + B.label;
  out.abs_error = composed_error(A, B);
  return out;
}

TruncatedOperator commutator(const TruncatedOperator &A, const TruncatedOperator &B) {
  check_compatible(A, B, "commutator");
  TruncatedOperator out;
  out.size = A.size;
  out.s = A.s;
  out.entries = A.entries * B.entries - B.entries * A.entries;
  out.exact_band = A.exact_band + B.exact_band;
  // Products of banded matrices fill only |n - m| <= band sum; clear
  // rounding residue outside it so the band is structural.
  for (int n = 0; n < out.size; ++n)
    for (int m = 0; m < out.size; ++m)
      if (std::abs(n - m) > out.exact_band)
        out.entries(n, m) = 0.0;
  out.exact_window = composed_window(A, B);
  out.label = "[" + A.label + "," + B.label + "]";
  out.abs_error = 2.0 * composed_error(A, B);
  return out;
}

double berezin_tail_indicator(cplx z, SobolevOrder s, int N) {
  const double r2 = std::norm(z);
  if (r2 == 0.0)
    return 0.0;
  return std::exp(N * std::log(r2) - log_gamma(s.value() + N + 1.0));
}

int berezin_min_size(double radius, SobolevOrder s, double tol) {
  int N = 1;
  // The indicator is decreasing in N once N exceeds |z|^2, and increasing in
  // |z|, so checking the boundary radius is enough.
  while (N < 100000 &&
         (N <= radius * radius || berezin_tail_indicator(radius, s, N) >= tol))
    ++N;
  return N;
}

cplx berezin(const TruncatedOperator &A, cplx z, double tail_tol) {
  const double indicator = berezin_tail_indicator(z, A.s, A.size);
  if (!(indicator < tail_tol)) {
    std::ostringstream msg;
    msg << "berezin: truncation N = " << A.size << " is too small at |z| = "
        << std::abs(z) << " (tail indicator " << indicator << " >= " << tail_tol
        << "); use N >= " << berezin_min_size(std::abs(z), A.s, tail_tol);
    throw DomainError(msg.str());
  }
  const int N = A.size;
  Eigen::VectorXcd c(N);
  const double r = std::abs(z);
  const double theta = std::arg(std::conj(z));
  for (int n = 0; n < N; ++n) {
    const double log_mag = (r == 0.0 ? (n == 0 ? 0.0 : -INFINITY) : n * std::log(r)) -
                           0.5 * log_gamma(A.s.value() + n + 1.0);
    c(n) = std::polar(std::exp(log_mag), n * theta);
  }
  const Eigen::VectorXcd Ac = A.entries * c;
  // Same accumulation for both sums, so A = I gives exactly 1.
  cplx numerator = 0.0;
  double denominator = 0.0;
  for (int n = 0; n < N; ++n) {
    numerator += std::conj(c(n)) * Ac(n);
    denominator += (std::conj(c(n)) * c(n)).real();
  }
  return numerator / denominator;
}

double window_max_abs(const TruncatedOperator &A, int window) {
  return window_peak(A, window).value;
}

WindowPeak window_peak(const TruncatedOperator &A, int window) {
  if (window < 0 || window >= A.size) {
    std::ostringstream msg;
    msg << "window_max_abs: window " << window << " outside [0, " << A.size - 1 << "]";
    throw PreconditionError(msg.str());
  }
  WindowPeak peak;
  for (int n = 0; n <= window; ++n)
    for (int m = 0; m <= window; ++m) {
      const double a = std::abs(A.entries(n, m));
      if (a > peak.value)
        peak = {n, m, a};
    }
  return peak;
}

} // namespace fock

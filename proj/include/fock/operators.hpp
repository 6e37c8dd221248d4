#pragma once

#include "fock/fock_space.hpp"
#include "fock/symbols.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace fock {

using ComplexMatrix = Eigen::MatrixXcd;

/// N x N compression of an operator to span{e_0, ..., e_{N-1}} in the
/// normalized monomial basis e_n = z^n / sqrt(Gamma(s + n + 1)).
///
/// entries(n, m) = <A e_m, e_n>_s. Entries with |n - m| > exact_band are
/// structurally zero. Entries with n, m <= exact_window coincide with the
/// untruncated operator (exact_window = -1 means no such entries).
struct TruncatedOperator {
  int size = 0;
  SobolevOrder s{0.0};
  ComplexMatrix entries;
  int exact_band = 0;
  int exact_window = -1;
  std::string label;
  double abs_error = 0.0; ///< largest propagated entry error estimate

  static TruncatedOperator identity(int n, SobolevOrder s, std::string label = "I");
  static TruncatedOperator zero(int n, SobolevOrder s, std::string label = "0");
};

/// Matrix of T_u = P^s(u .) restricted to the first N basis vectors.
///
/// Mode j contributes <T e_m, e_{m+j}> = 2 pi M[v_j G_s](2m + j + 2) /
/// sqrt(Gamma(s+m+1) Gamma(s+m+j+1)); entries are computed in parallel and
/// independently, so the result does not depend on the thread count.
/// Throws AccuracyError naming (j, m) if a Mellin evaluation fails.
TruncatedOperator toeplitz_matrix(const SymbolSpec &spec, SobolevOrder s, int N,
                                  const QuadratureSpec &quad);

/// lambda(k) = M[v0 G_s](2k + 2) / M[G_s](2k + 2), k = 0..N-1: the diagonal
/// of the Toeplitz matrix of a radial symbol.
std::vector<cplx> radial_eigenvalues(const RadialProfile &v0, SobolevOrder s, int N,
                                     const QuadratureSpec &quad);

/// AB on the common truncation; exact_band adds, and entries stay exact on
/// indices <= min(windows) - (band_A + band_B).
TruncatedOperator product(const TruncatedOperator &A, const TruncatedOperator &B);

/// AB - BA with the same band and window bookkeeping as product().
TruncatedOperator commutator(const TruncatedOperator &A, const TruncatedOperator &B);

/// |z|^{2N} / Gamma(s + N + 1): size of the first kernel coefficient dropped
/// by an N-term truncation.
double berezin_tail_indicator(cplx z, SobolevOrder s, int N);

/// Smallest N with berezin_tail_indicator(z, s, N) < tol for all |z| <= radius.
int berezin_min_size(double radius, SobolevOrder s, double tol);

inline constexpr double kBerezinTailTol = 1e-12;

/// Berezin transform <A K_z, K_z> / ||K_z||^2 on the truncation, i.e.
/// (c* A c) / (c* c) with c_n = conj(z)^n / sqrt(Gamma(s + n + 1)).
/// Throws DomainError when the truncation tail indicator is not below
/// tail_tol.
cplx berezin(const TruncatedOperator &A, cplx z, double tail_tol = kBerezinTailTol);

/// max |entries(n, m)| over n, m <= window.
double window_max_abs(const TruncatedOperator &A, int window);

struct WindowPeak {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// Location of the largest-magnitude entry over n, m <= window (row-major
/// first occurrence).
WindowPeak window_peak(const TruncatedOperator &A, int window);

} // namespace fock

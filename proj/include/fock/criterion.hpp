#pragma once

#include "fock/fock_space.hpp"
#include "fock/operators.hpp"
#include "fock/profile.hpp"
#include "fock/symbols.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fock {

/// A value with its propagated absolute error bar.
struct Estimate {
  cplx value;
  double abs_error = 0.0;

  /// |value| <= multiplier * abs_error.
  bool vanishes(double multiplier) const;
};

Estimate operator*(const Estimate &a, const Estimate &b);

/// Phi_j(k + s) = M[u G_s](2k+2) / Gamma(k+s+1) - M[u G_s](2k+2j+2) / Gamma(k+j+s+1).
/// Requires k >= 0 and k + j >= 0 (DomainError otherwise).
Estimate phi(int j, int k, SobolevOrder s, const RadialProfile &u,
             const QuadratureSpec &quad);

/// Psi_j(k + s) = M[v_j G_s](j + 2k + 2). Requires j + 2k + 2 + 2s > 0.
Estimate psi(int j, int k, SobolevOrder s, const RadialProfile &v_j,
             const QuadratureSpec &quad);

/// Q_{s,j}(k) = Phi_j(k+s) Psi_j(k+s) Gamma(k+s+1).
cplx q_value(const Estimate &product, int k, SobolevOrder s);

struct CriterionCell {
  int j = 0;
  int k = 0;
  Estimate phi;
  Estimate psi;
  Estimate product; ///< phi * psi, stored exactly as multiplied
  std::optional<double> matrix_residual;
  std::string note; ///< nonempty when the cell could not be evaluated
  bool ok() const { return note.empty(); }
};

struct Verdict {
  enum class Kind { consistent_radial, nonradial_mode_detected, inconclusive };
  Kind kind = Kind::inconclusive;
  std::vector<int> modes; ///< offending modes for nonradial_mode_detected
  std::string reason;     ///< explanation for inconclusive

  static std::string kind_name(Kind k);
};

struct CriterionOptions {
  /// "Vanishing" means |value| <= verdict_multiplier * error bar.
  double verdict_multiplier = 3.0;
  /// Externally asserted commutation. When unset, commutation is taken as
  /// observed iff every product vanishes.
  std::optional<bool> asserted_commutation;
};

using CellIndex = std::pair<int, int>; // (j, k)

struct CriterionReport {
  SobolevOrder s{0.0};
  int k_min = 0;
  int k_max = 0;
  int j_min = 0;
  int j_max = 0;
  double verdict_multiplier = 3.0;
  std::map<CellIndex, CriterionCell> cells;
  bool commutation_observed = false;
  std::optional<bool> commutation_asserted;
  Verdict verdict;
  std::string u_label;
  std::string v_label;
};

/// Fills Phi, Psi and their products for every mode j of v and k = 0..k_max
/// with k + j >= 0, then decides the radiality verdict:
///  - no nonradial modes in v: consistent_radial;
///  - Phi vanishes on every evaluated cell: inconclusive("u constant");
///  - commutation holds (observed or asserted) while some nonradial mode has
///    both Phi and Psi nonvanishing: inconclusive (internal inconsistency);
///  - otherwise the nonradial modes with nonvanishing Psi are reported as
///    nonradial_mode_detected, or consistent_radial if there are none.
/// Accuracy failures annotate the affected cells; any such failure makes the
/// verdict inconclusive.
CriterionReport functional_equation_residuals(const RadialProfile &u, const SymbolSpec &v,
                                              SobolevOrder s, int k_max,
                                              const QuadratureSpec &quad,
                                              const CriterionOptions &options = {});

/// Relative discrepancy, per (j, k), between the commutator entry
/// [T_u, T_v](k + j, k) and -(2 pi)^2 Phi_j Psi_j / sqrt(Gamma(s+k+1) Gamma(s+k+j+1)).
/// Covers every mode of v and every k >= 0 with k, k + j inside the
/// commutator's exactness window. Throws PreconditionError if the window is
/// empty.
std::map<CellIndex, double> commutator_cross_check(const RadialProfile &u,
                                                   const SymbolSpec &v, SobolevOrder s,
                                                   int N, const QuadratureSpec &quad);

/// Stores cross-check discrepancies into matching report cells.
void attach_matrix_residuals(CriterionReport &report,
                             const std::map<CellIndex, double> &residuals);

struct MomentProbe {
  int k = 0;
  cplx value;
  double abs_error = 0.0;
  bool below_tolerance = false;
};

/// Probe (not proof) of moment vanishing: integral of f(t) e^{-t} t^{a k}
/// over (0, inf) for each k, flagged when within multiplier * error of 0.
/// Requires a in (0, 2] and k > 0.
std::vector<MomentProbe> moment_vanishing_probe(const RadialProfile &f, double a,
                                                std::span<const int> k_list,
                                                const QuadratureSpec &quad,
                                                double multiplier = 3.0);

struct PeriodicityProbe {
  double max_abs_difference = 0.0;
  double error_bar = 0.0;         ///< largest error estimate over the grid
  double worst_error_ratio = 0.0; ///< max over the grid of |difference| / its error
  double worst_z = 0.0;
};

/// H_s(z) = M[u G_s](2z + 2) / Gamma(z + s + 1) (that is H(z + s)); returns the
/// maximum of |H_s(z) - H_s(z + j)| over the real grid. Grid points need
/// z + s > -1.
PeriodicityProbe periodicity_probe(const RadialProfile &u, SobolevOrder s, int j,
                                   std::span<const double> z_grid,
                                   const QuadratureSpec &quad);

} // namespace fock

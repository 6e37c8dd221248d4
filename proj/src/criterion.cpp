#include "fock/criterion.hpp"

#include "fock/errors.hpp"
#include "fock/mellin.hpp"
#include "fock/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fock {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// H_s(x) = M[u G_s](2x + 2) / Gamma(x + s + 1) at real x with x + s > -1.
Estimate h_term(double x, SobolevOrder s, const RadialProfile &u,
                const QuadratureSpec &quad) {
  const MellinValue m = mellin_weighted(u, s, 2.0 * x + 2.0, quad);
  const double gamma_arg = x + s.value() + 1.0;
  const double inv_gamma = std::exp(-log_gamma(gamma_arg));
  const cplx value = m.value * inv_gamma;
  return {value, m.abs_error_estimate * inv_gamma +
                     std::abs(value) * gamma_relative_error(gamma_arg)};
}

Estimate difference(const Estimate &a, const Estimate &b) {
  return {a.value - b.value,
          a.abs_error + b.abs_error + kEps * (std::abs(a.value) + std::abs(b.value))};
}

void check_phi_indices(int j, int k) {
  if (k < 0 || k + j < 0) {
    std::ostringstream msg;
    msg << "phi: need k >= 0 and k + j >= 0, got j = " << j << ", k = " << k;
    throw DomainError(msg.str());
  }
}

} // namespace

bool Estimate::vanishes(double multiplier) const {
  return std::abs(value) <= multiplier * abs_error;
}

Estimate operator*(const Estimate &a, const Estimate &b) {
  const double pa = std::abs(a.value);
  const double pb = std::abs(b.value);
  return {a.value * b.value, pa * b.abs_error + pb * a.abs_error +
                                 a.abs_error * b.abs_error + kEps * pa * pb};
}

std::string Verdict::kind_name(Kind k) {
  switch (k) {
  case Kind::consistent_radial:
    return "consistent_radial";
  case Kind::nonradial_mode_detected:
    return "nonradial_mode_detected";
  case Kind::inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

Estimate phi(int j, int k, SobolevOrder s, const RadialProfile &u,
             const QuadratureSpec &quad) {
  check_phi_indices(j, k);
  return difference(h_term(k, s, u, quad), h_term(k + j, s, u, quad));
}

Estimate psi(int j, int k, SobolevOrder s, const RadialProfile &v_j,
             const QuadratureSpec &quad) {
  const MellinValue m = mellin_weighted(v_j, s, j + 2.0 * k + 2.0, quad);
  return {m.value, m.abs_error_estimate};
}

cplx q_value(const Estimate &product, int k, SobolevOrder s) {
  return product.value * std::exp(log_gamma(k + s.value() + 1.0));
}

CriterionReport functional_equation_residuals(const RadialProfile &u, const SymbolSpec &v,
                                              SobolevOrder s, int k_max,
                                              const QuadratureSpec &quad,
                                              const CriterionOptions &options) {
  if (k_max < 0)
    throw PreconditionError("functional_equation_residuals: k_max must be >= 0");

  CriterionReport report;
  report.s = s;
  report.k_min = 0;
  report.k_max = k_max;
  report.verdict_multiplier = options.verdict_multiplier;
  report.commutation_asserted = options.asserted_commutation;
  report.u_label = u.description();
  report.v_label = v.name();
  if (!v.modes().empty()) {
    report.j_min = v.modes().begin()->first;
    report.j_max = v.modes().rbegin()->first;
  }

  // H_s terms are shared between cells: index x runs over 0..k_max + max j.
  const int h_max = k_max + std::max(0, report.j_max);
  struct HSlot {
    Estimate value;
    std::string failure;
  };
  std::vector<HSlot> h(static_cast<std::size_t>(h_max) + 1);
  parallel_for(h.size(), [&](std::size_t x) {
    try {
      h[x].value = h_term(static_cast<double>(x), s, u, quad);
    } catch (const AccuracyError &e) {
      h[x].failure = e.what();
    }
  });

  std::vector<CellIndex> order;
  for (const auto &[j, vj] : v.modes())
    for (int k = std::max(0, -j); k <= k_max; ++k)
      order.emplace_back(j, k);

  std::vector<CriterionCell> cells(order.size());
  parallel_for(order.size(), [&](std::size_t idx) {
    const auto [j, k] = order[idx];
    CriterionCell &cell = cells[idx];
    cell.j = j;
    cell.k = k;
    const HSlot &a = h[k];
    const HSlot &b = h[k + j];
    if (!a.failure.empty() || !b.failure.empty()) {
      cell.note = "phi accuracy failure: " + (a.failure.empty() ? b.failure : a.failure);
      return;
    }
    cell.phi = difference(a.value, b.value);
    try {
      cell.psi = psi(j, k, s, v.modes().at(j), quad);
    } catch (const AccuracyError &e) {
      cell.note = std::string("psi accuracy failure: ") + e.what();
      return;
    }
    cell.product = cell.phi * cell.psi;
  });
  for (auto &cell : cells)
    report.cells.emplace(CellIndex{cell.j, cell.k}, std::move(cell));

  const double mult = options.verdict_multiplier;
  int failures = 0;
  bool all_products_vanish = true;
  bool phi_all_vanish = true;
  bool any_nonradial_cell = false;
  std::map<int, bool> psi_alive, phi_alive;
  for (const auto &[idx, cell] : report.cells) {
    if (!cell.ok()) {
      ++failures;
      continue;
    }
    if (!cell.product.vanishes(mult))
      all_products_vanish = false;
    if (cell.j == 0)
      continue;
    any_nonradial_cell = true;
    if (!cell.phi.vanishes(mult)) {
      phi_all_vanish = false;
      phi_alive[cell.j] = true;
    }
    if (!cell.psi.vanishes(mult))
      psi_alive[cell.j] = true;
  }
  report.commutation_observed = all_products_vanish && failures == 0;
  const bool commutation = options.asserted_commutation.value_or(report.commutation_observed);

  Verdict &verdict = report.verdict;
  if (v.is_radial()) {
    verdict.kind = Verdict::Kind::consistent_radial;
  } else if (failures > 0) {
    verdict.kind = Verdict::Kind::inconclusive;
    verdict.reason = std::to_string(failures) + " cell(s) failed to reach quadrature accuracy";
  } else if (!any_nonradial_cell || phi_all_vanish) {
    verdict.kind = Verdict::Kind::inconclusive;
    verdict.reason = "u constant";
  } else {
    std::vector<int> alive;
    std::vector<int> contradicting;
    for (const auto &[j, on] : psi_alive) {
      alive.push_back(j);
      if (phi_alive.count(j))
        contradicting.push_back(j);
    }
    if (commutation && !contradicting.empty()) {
      std::ostringstream msg;
      msg << "internal inconsistency: commutation holds but modes";
      for (int j : contradicting)
        msg << ' ' << j;
      msg << " have nonvanishing Phi and Psi";
      verdict.kind = Verdict::Kind::inconclusive;
      verdict.reason = msg.str();
    } else if (alive.empty()) {
      verdict.kind = Verdict::Kind::consistent_radial;
    } else {
      verdict.kind = Verdict::Kind::nonradial_mode_detected;
      verdict.modes = alive;
    }
  }
  return report;
}

std::map<CellIndex, double> commutator_cross_check(const RadialProfile &u,
                                                   const SymbolSpec &v, SobolevOrder s,
                                                   int N, const QuadratureSpec &quad) {
  const TruncatedOperator Tu = toeplitz_matrix(SymbolSpec::radial(u, "u"), s, N, quad);
  const TruncatedOperator Tv = toeplitz_matrix(v, s, N, quad);
  const TruncatedOperator C = commutator(Tu, Tv);
  const int W = C.exact_window;
  if (W < 0) {
    std::ostringstream msg;
    msg << "commutator_cross_check: N = " << N << " leaves no exactness window for band "
        << C.exact_band << "; need N >= " << C.exact_band + 1;
    throw PreconditionError(msg.str());
  }

  std::vector<CellIndex> order;
  for (const auto &[j, vj] : v.modes())
    for (int k = std::max(0, -j); k <= W && k + j <= W; ++k)
      order.emplace_back(j, k);

  std::vector<double> out(order.size());
  const double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  parallel_for(order.size(), [&](std::size_t idx) {
    const auto [j, k] = order[idx];
    const Estimate prod = phi(j, k, s, u, quad) * psi(j, k, s, v.modes().at(j), quad);
    const double norm = std::exp(-0.5 * (log_gamma(s.value() + k + 1.0) +
                                         log_gamma(s.value() + k + j + 1.0)));
    const cplx formula = -four_pi_sq * prod.value * norm;
    const cplx matrix = C.entries(k + j, k);
    const double scale = std::max(std::abs(formula), std::abs(matrix));
    const double noise = 3.0 * (four_pi_sq * prod.abs_error * norm + C.abs_error);
    out[idx] = scale <= noise ? 0.0 : std::abs(formula - matrix) / scale;
  });

  std::map<CellIndex, double> result;
  for (std::size_t idx = 0; idx < order.size(); ++idx)
    result.emplace(order[idx], out[idx]);
  return result;
}

void attach_matrix_residuals(CriterionReport &report,
                             const std::map<CellIndex, double> &residuals) {
  for (auto &[idx, cell] : report.cells) {
    auto it = residuals.find(idx);
    if (it != residuals.end())
      cell.matrix_residual = it->second;
  }
}

std::vector<MomentProbe> moment_vanishing_probe(const RadialProfile &f, double a,
                                                std::span<const int> k_list,
                                                const QuadratureSpec &quad,
                                                double multiplier) {
  if (!(a > 0.0 && a <= 2.0))
    throw DomainError("moment_vanishing_probe: a must lie in (0, 2]");
  std::vector<MomentProbe> out;
  out.reserve(k_list.size());
  // t = x^2 turns e^{-t} t^{ak} dt into 2 e^{-x^2} x^{2ak+1} dx.
  const GrowthBound growth{f.growth_constant(), 2.0 * f.growth_exponent()};
  auto g = [&f](double x) { return f(x * x); };
  for (int k : k_list) {
    if (k <= 0)
      throw DomainError("moment_vanishing_probe: k must be positive");
    MomentProbe p;
    p.k = k;
    if (!f.is_zero()) {
      const double alpha = 2.0 * a * k + 2.0;
      const IntegralResult r =
          gaussian_weighted_integral(g, alpha, quad.covering(alpha, growth), growth);
      p.value = 2.0 * r.value;
      p.abs_error = 2.0 * r.abs_error;
    }
    p.below_tolerance = std::abs(p.value) <= multiplier * p.abs_error;
    out.push_back(p);
  }
  return out;
}

PeriodicityProbe periodicity_probe(const RadialProfile &u, SobolevOrder s, int j,
                                   std::span<const double> z_grid,
                                   const QuadratureSpec &quad) {
  if (j <= 0)
    throw DomainError("periodicity_probe: period j must be a positive integer");
  PeriodicityProbe out;
  for (double z : z_grid) {
    if (!(z + s.value() > -1.0)) {
      std::ostringstream msg;
      msg << "periodicity_probe: grid point " << z << " lies outside z + s > -1";
      throw DomainError(msg.str());
    }
    const Estimate d = difference(h_term(z, s, u, quad), h_term(z + j, s, u, quad));
    const double mag = std::abs(d.value);
    if (mag >= out.max_abs_difference) {
      out.max_abs_difference = mag;
      out.worst_z = z;
    }
    out.error_bar = std::max(out.error_bar, d.abs_error);
    if (d.abs_error > 0.0)
      out.worst_error_ratio = std::max(out.worst_error_ratio, mag / d.abs_error);
    else if (mag > 0.0)
      out.worst_error_ratio = std::numeric_limits<double>::infinity();
  }
  return out;
}

} // namespace fock

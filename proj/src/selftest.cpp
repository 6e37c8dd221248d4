#include "fock/selftest.hpp"

#include "fock/criterion.hpp"
#include "fock/mellin.hpp"
#include "fock/operators.hpp"
#include "fock/oracles.hpp"
#include "fock/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fock {

namespace {

const std::vector<double> kOrders = {0.0, 0.5, 1.0, 2.3};

double rel_diff(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

SymbolSpec symbol_z() { return SymbolSpec({{1, RadialProfile::monomial(1.0)}}, "z"); }

SymbolSpec symbol_z2() { return SymbolSpec({{2, RadialProfile::monomial(2.0)}}, "z^2"); }

SymbolSpec symbol_re_z() {
  return SymbolSpec({{1, RadialProfile::monomial(1.0, 0.5)}, {-1, RadialProfile::monomial(1.0, 0.5)}},
                    "Re z");
}

AcceptanceResult mellin_oracle() {
  AcceptanceResult r{1, "Mellin oracle agreement", false, 0.0, 1e-10, ""};
  const QuadratureSpec quad;
  std::ostringstream worst;
  for (int p = 0; p <= 3; ++p)
    for (double s : kOrders)
      for (int zeta = 1; zeta <= 60; ++zeta) {
        const SobolevOrder order(s);
        const cplx q = mellin_weighted(RadialProfile::monomial(p), order, zeta, quad).value;
        const double e = rel_diff(q, mellin_monomial_closed_form(p, order, zeta));
        if (e >= r.measured) {
          r.measured = e;
          worst.str("");
          worst << "worst at p=" << p << " s=" << s << " zeta=" << zeta;
        }
      }
  r.detail = worst.str();
  return r;
}

AcceptanceResult kernel_reduction() {
  AcceptanceResult r{2, "Kernel reduction at s = 0", false, 0.0, 1e-12, "81 (z, w) pairs"};
  std::vector<cplx> pts;
  for (double x : {-1.4, 0.0, 1.4})
    for (double y : {-1.4, 0.0, 1.4})
      pts.emplace_back(x, y);
  for (cplx z : pts)
    for (cplx w : pts) {
      const cplx k = kernel_eval(z, w, SobolevOrder(0.0), 1e-15).value;
      r.measured = std::max(r.measured, std::abs(k - std::exp(z * std::conj(w))));
    }
  return r;
}

AcceptanceResult radial_diagonality() {
  AcceptanceResult r{3, "Radial diagonality and eigenvalues", false, 0.0, 1e-10,
                     "T_{|z|^2}, N = 32"};
  const QuadratureSpec quad;
  const auto u = SymbolSpec::radial(RadialProfile::monomial(2.0), "|z|^2");
  for (double s : kOrders) {
    const TruncatedOperator T = toeplitz_matrix(u, SobolevOrder(s), 32, quad);
    for (int n = 0; n < 32; ++n)
      for (int m = 0; m < 32; ++m) {
        const cplx expected = n == m ? cplx(s + m + 1.0) : cplx(0.0);
        const double e = n == m ? rel_diff(T.entries(n, m), expected)
                                : std::abs(T.entries(n, m));
        r.measured = std::max(r.measured, e);
      }
  }
  return r;
}

AcceptanceResult radial_commutation() {
  AcceptanceResult r{4, "Radial-radial commutation", false, 0.0, 1e-10,
                     "u = r^2, v = exp(-r), N = 32"};
  const QuadratureSpec quad;
  const auto u = SymbolSpec::radial(RadialProfile::monomial(2.0), "r^2");
  const auto v = SymbolSpec::radial(
      RadialProfile::callable([](double t) { return cplx(std::exp(-t)); }, 0.0, 1.0, "exp(-r)"),
      "exp(-r)");
  for (double s : kOrders) {
    const TruncatedOperator C = commutator(toeplitz_matrix(u, SobolevOrder(s), 32, quad),
                                           toeplitz_matrix(v, SobolevOrder(s), 32, quad));
    r.measured = std::max(r.measured, window_max_abs(C, C.exact_window));
  }
  return r;
}

AcceptanceResult criterion_matrix_equivalence() {
  AcceptanceResult r{5, "Criterion / matrix equivalence", false, 0.0, 1e-8, ""};
  const QuadratureSpec quad;
  int cells = 0;
  for (double p : {2.0, 4.0})
    for (const SymbolSpec &v : {symbol_z(), symbol_z2(), symbol_re_z()})
      for (double s : kOrders) {
        const auto res = commutator_cross_check(RadialProfile::monomial(p), v, SobolevOrder(s),
                                                32, quad);
        for (const auto &[idx, d] : res) {
          if (idx.second > 20)
            continue;
          ++cells;
          r.measured = std::max(r.measured, d);
        }
      }
  r.detail = std::to_string(cells) + " cells, k <= 20, N = 32";
  return r;
}

AcceptanceResult nonradial_detection() {
  AcceptanceResult r{6, "Nonradial v detected for u = r^2, v = z", false, 0.0, 1e-9, ""};
  const QuadratureSpec quad;
  const auto u = RadialProfile::monomial(2.0);
  bool verdicts_ok = true;
  for (double s : kOrders) {
    const SobolevOrder order(s);
    const CriterionReport rep = functional_equation_residuals(u, symbol_z(), order, 8, quad);
    if (rep.verdict.kind != Verdict::Kind::nonradial_mode_detected ||
        rep.verdict.modes != std::vector<int>{1}) {
      verdicts_ok = false;
      r.detail += "s=" + std::to_string(s) + " verdict " + Verdict::kind_name(rep.verdict.kind) + "; ";
    }
    const TruncatedOperator C =
        commutator(toeplitz_matrix(SymbolSpec::radial(u, "r^2"), order, 8, quad),
                   toeplitz_matrix(symbol_z(), order, 8, quad));
    r.measured = std::max(r.measured, std::abs(C.entries(1, 0) - std::sqrt(s + 1.0)));
  }
  if (verdicts_ok)
    r.detail = "verdict nonradial_mode_detected([1]) for all s";
  else
    r.measured = std::max(r.measured, 1.0);
  return r;
}

AcceptanceResult constant_degeneracy() {
  AcceptanceResult r{7, "Constant-symbol degeneracy", false, 0.0, 3.0,
                     "max |value| / error over Phi sweep and periodicity probe"};
  const QuadratureSpec quad;
  const auto one = RadialProfile::monomial(0.0);
  std::vector<double> grid;
  for (int i = 0; i <= 40; ++i)
    grid.push_back(0.25 * i);
  for (double s : kOrders) {
    const SobolevOrder order(s);
    for (int j = -4; j <= 4; ++j)
      for (int k = std::max(0, -j); k <= 20; ++k) {
        const Estimate f = phi(j, k, order, one, quad);
        const double ratio = f.abs_error > 0.0 ? std::abs(f.value) / f.abs_error
                                               : (f.value == 0.0 ? 0.0 : INFINITY);
        r.measured = std::max(r.measured, ratio);
      }
    for (int j = 1; j <= 3; ++j)
      r.measured = std::max(r.measured, periodicity_probe(one, order, j, grid, quad).worst_error_ratio);
  }
  return r;
}

SymbolSpec bounded_u() {
  return SymbolSpec(
      {{0, RadialProfile::callable([](double t) { return cplx(std::exp(-t)); }, 0.0, 1.0, "exp(-r)")},
       {1, RadialProfile::callable([](double t) { return cplx(t * std::exp(-t * t)); }, 0.0, 1.0,
                                   "r exp(-r^2)")}},
      "u");
}

SymbolSpec bounded_v() {
  return SymbolSpec(
      {{-1, RadialProfile::callable([](double t) { return cplx(0.5, 0.3) * t * std::exp(-t); }, 0.0,
                                    1.0, "(0.5+0.3i) r exp(-r)")},
       {2, RadialProfile::callable([](double t) { return cplx(t * t * std::exp(-t * t)); }, 0.0,
                                   1.0, "r^2 exp(-r^2)")}},
      "v");
}

AcceptanceResult adjoint_symmetry() {
  AcceptanceResult r{8, "Berezin adjoint symmetry", false, 0.0, 1e-8, ""};
  const QuadratureSpec quad;
  const SymbolSpec u = bounded_u(), v = bounded_v();
  int N_used = 0;
  for (double s : kOrders) {
    const SobolevOrder order(s);
    const int N = berezin_min_size(2.0, order, kBerezinTailTol);
    N_used = std::max(N_used, N);
    const TruncatedOperator uv =
        product(toeplitz_matrix(u, order, N, quad), toeplitz_matrix(v, order, N, quad));
    const TruncatedOperator vu = product(toeplitz_matrix(v.conjugated(), order, N, quad),
                                         toeplitz_matrix(u.conjugated(), order, N, quad));
    for (int i = 0; i <= 8; ++i)
      for (int k = 0; k < 8; ++k) {
        const cplx z = std::polar(0.25 * i, 2.0 * std::numbers::pi * k / 8.0);
        r.measured = std::max(r.measured, std::abs(berezin(uv, z) - std::conj(berezin(vu, z))));
      }
  }
  r.detail = "|z| <= 2, N up to " + std::to_string(N_used);
  return r;
}

SymbolSpec trig_symbol() {
  std::map<int, RadialProfile> modes;
  modes.emplace(0, RadialProfile::polynomial({1.0, 0.0, 0.5}));
  for (int j = 1; j <= 4; ++j) {
    const cplx c(1.0 / j, 0.25 * j);
    modes.emplace(j, RadialProfile::callable(
                         [j, c](double t) { return c * std::pow(t, j) * std::exp(-0.25 * t * t); },
                         0.0, 40.0, "bump"));
    modes.emplace(-j, RadialProfile::monomial(j, cplx(0.1 * j, -0.2)));
  }
  return SymbolSpec(std::move(modes), "trig");
}

AcceptanceResult decomposition_round_trip() {
  AcceptanceResult r{9, "Decomposition round trip", false, 0.0, 1e-8, ""};
  const SymbolSpec u = trig_symbol();
  const RadialGrid grid = radial_quadrature_grid(8.0, 32, 8);
  double sample_err = 0.0;
  for (int M : {10, 16}) {
    const PolarSamples samples = sample_polar(u, grid.nodes, M);
    const SymbolSpec rec = decompose(samples, 4);
    for (std::size_t i = 0; i < samples.radii.size(); ++i)
      for (int k = 0; k < M; ++k) {
        const cplx z = std::polar(samples.radii[i], samples.angle(k));
        sample_err = std::max(sample_err, std::abs(evaluate(rec, z) - samples.at(i, k)));
      }
    auto diff = [&](cplx z) { return evaluate(rec, z) - evaluate(u, z); };
    for (double s : kOrders)
      r.measured = std::max(r.measured, std::sqrt(l2_norm_sq(diff, SobolevOrder(s), grid, 64)));
  }
  std::ostringstream d;
  d << "per-sample error " << sample_err << " (limit 1e-10)";
  r.detail = d.str();
  if (sample_err > 1e-10)
    r.measured = std::max(r.measured, 1.0);
  return r;
}

AcceptanceResult brute_force_entries() {
  AcceptanceResult r{10, "Brute-force entry oracle", false, 0.0, 1e-6, "N = 6, s in {0, 1}"};
  const QuadratureSpec quad;
  const std::vector<SymbolSpec> symbols = {SymbolSpec::radial(RadialProfile::monomial(0.0), "1"),
                                           SymbolSpec::radial(RadialProfile::monomial(2.0), "|z|^2"),
                                           symbol_z(), symbol_re_z()};
  for (double s : {0.0, 1.0})
    for (const SymbolSpec &u : symbols) {
      const SobolevOrder order(s);
      const ComplexMatrix T = toeplitz_matrix(u, order, 6, quad).entries;
      const ComplexMatrix B =
          oracle::brute_force_toeplitz([&u](cplx z) { return evaluate(u, z); }, s, 6);
      const double scale = std::max(1.0, B.cwiseAbs().maxCoeff());
      r.measured = std::max(r.measured, (T - B).cwiseAbs().maxCoeff() / scale);
    }
  return r;
}

template <class F> AcceptanceResult guarded(int id, const char *name, F check) {
  try {
    AcceptanceResult r = check();
    r.passed = r.measured <= r.tolerance;
    return r;
  } catch (const std::exception &e) {
    return {id, name, false, INFINITY, 0.0, std::string("exception: ") + e.what()};
  }
}

} // namespace

std::vector<AcceptanceResult> run_acceptance() {
  return {
      guarded(1, "Mellin oracle agreement", mellin_oracle),
      guarded(2, "Kernel reduction at s = 0", kernel_reduction),
      guarded(3, "Radial diagonality and eigenvalues", radial_diagonality),
      guarded(4, "Radial-radial commutation", radial_commutation),
      guarded(5, "Criterion / matrix equivalence", criterion_matrix_equivalence),
      guarded(6, "Nonradial v detected for u = r^2, v = z", nonradial_detection),
      guarded(7, "Constant-symbol degeneracy", constant_degeneracy),
      guarded(8, "Berezin adjoint symmetry", adjoint_symmetry),
      guarded(9, "Decomposition round trip", decomposition_round_trip),
      guarded(10, "Brute-force entry oracle", brute_force_entries),
  };
}

bool print_acceptance(std::ostream &os, const std::vector<AcceptanceResult> &results) {
  bool all = true;
  for (const auto &r : results) {
    all = all && r.passed;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name
       << ": measured " << std::setprecision(3) << r.measured << " <= " << r.tolerance;
    if (!r.detail.empty())
      os << " (" << r.detail << ")";
    os << '\n';
  }
  return all;
}

} // namespace fock

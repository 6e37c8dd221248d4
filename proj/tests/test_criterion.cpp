#include <doctest.h>

#include "fock/criterion.hpp"
#include "fock/errors.hpp"
#include "fock/operators.hpp"

#include <cmath>
#include <numbers>

using namespace fock;

namespace {
const QuadratureSpec quad;
const double two_pi = 2.0 * std::numbers::pi;
SymbolSpec zsym() { return SymbolSpec({{1, RadialProfile::monomial(1.0)}}, "z"); }
} // namespace

TEST_CASE("phi values") {
  const auto r2 = RadialProfile::monomial(2.0);
  for (double s : {0.0, 0.5, 2.3}) {
    const SobolevOrder order(s);
    CHECK(phi(0, 3, order, r2, quad).value == cplx(0.0));
    for (int k = 0; k < 5; ++k) {
      CHECK(phi(1, k, order, r2, quad).value.real() == doctest::Approx(-1.0 / two_pi).epsilon(1e-12));
      CHECK(phi(3, k, order, r2, quad).value.real() == doctest::Approx(-3.0 / two_pi).epsilon(1e-12));
      CHECK(std::abs(phi(2, k, order, RadialProfile::monomial(0.0), quad).value) < 1e-14);
    }
    const auto lambda = radial_eigenvalues(r2, order, 4, quad);
    CHECK(phi(2, 1, order, r2, quad).value.real() ==
          doctest::Approx((lambda[1] - lambda[3]).real() / two_pi).epsilon(1e-12));
  }
  CHECK_THROWS_AS(phi(-2, 1, SobolevOrder(0.0), r2, quad), DomainError);
  CHECK_THROWS_AS(phi(1, -1, SobolevOrder(0.0), r2, quad), DomainError);
}

TEST_CASE("phi index symmetry") {
  const auto u = RadialProfile::polynomial({1.0, 0.0, 1.0});
  for (int j : {1, 2, 3})
    for (int k = 0; k < 6; ++k) {
      const cplx a = phi(j, k, SobolevOrder(0.5), u, quad).value;
      const cplx b = phi(-j, k + j, SobolevOrder(0.5), u, quad).value;
      CHECK(std::abs(a + b) <= 1e-12);
    }
}

TEST_CASE("psi values") {
  for (double s : {0.0, 1.0}) {
    for (int k = 0; k < 4; ++k) {
      const Estimate p = psi(1, k, SobolevOrder(s), RadialProfile::monomial(1.0), quad);
      CHECK(p.value.real() == doctest::Approx(std::tgamma(s + k + 2.0) / two_pi).epsilon(1e-12));
      const Estimate q = psi(2, k, SobolevOrder(s), RadialProfile::monomial(3.0), quad);
      CHECK(q.value.real() ==
            doctest::Approx(std::tgamma(0.5 * (3.0 + 2 + 2 * k + 2 + 2 * s)) / two_pi).epsilon(1e-12));
    }
    CHECK(psi(1, 0, SobolevOrder(s), RadialProfile::zero(), quad).value == cplx(0.0));
  }
}

TEST_CASE("product for u = r^2, v = z at s = 0, k = 0 is -1 / (4 pi^2)") {
  const CriterionReport rep =
      functional_equation_residuals(RadialProfile::monomial(2.0), zsym(), SobolevOrder(0.0), 3, quad);
  const CriterionCell &c = rep.cells.at({1, 0});
  CHECK(c.product.value.real() == doctest::Approx(-0.0253302959105844429).epsilon(1e-12));
  CHECK(c.product.value == c.phi.value * c.psi.value);
  CHECK(q_value(c.product, 0, SobolevOrder(0.0)).real() == doctest::Approx(-0.0253302959105844429));
  CHECK(rep.verdict.kind == Verdict::Kind::nonradial_mode_detected);
  CHECK(rep.verdict.modes == std::vector<int>{1});
  CHECK_FALSE(rep.commutation_observed);
}

TEST_CASE("verdicts") {
  const auto r2 = RadialProfile::monomial(2.0);
  SUBCASE("radial v") {
    const SymbolSpec v = SymbolSpec::radial(
        RadialProfile::callable([](double t) { return cplx(std::exp(-t)); }, 0.0, 1.0, "e"), "v");
    const CriterionReport rep = functional_equation_residuals(r2, v, SobolevOrder(1.0), 4, quad);
    CHECK(rep.verdict.kind == Verdict::Kind::consistent_radial);
    for (const auto &[idx, cell] : rep.cells)
      CHECK(idx.first == 0);
  }
  SUBCASE("constant u") {
    const CriterionReport rep =
        functional_equation_residuals(RadialProfile::monomial(0.0), zsym(), SobolevOrder(0.5), 4, quad);
    CHECK(rep.verdict.kind == Verdict::Kind::inconclusive);
    CHECK(rep.verdict.reason == "u constant");
    CHECK(rep.commutation_observed);
  }
  SUBCASE("asserted commutation with a live mode is inconsistent") {
    CriterionOptions opts;
    opts.asserted_commutation = true;
    const CriterionReport rep = functional_equation_residuals(r2, zsym(), SobolevOrder(0.0), 2, quad, opts);
    CHECK(rep.verdict.kind == Verdict::Kind::inconclusive);
    CHECK(rep.verdict.reason.find("internal inconsistency") != std::string::npos);
  }
  SUBCASE("modes z and conj z") {
    const SymbolSpec v({{1, RadialProfile::monomial(1.0)}, {-1, RadialProfile::monomial(1.0)}}, "2 Re z");
    const CriterionReport rep = functional_equation_residuals(r2, v, SobolevOrder(0.0), 3, quad);
    CHECK(rep.verdict.modes == std::vector<int>{-1, 1});
    CHECK(rep.cells.count({-1, 0}) == 0);
    CHECK(rep.cells.count({-1, 1}) == 1);
  }
  SUBCASE("accuracy failures make the verdict inconclusive") {
    QuadratureSpec tight;
    tight.max_refinements = 1;
    tight.node_count = 2;
    tight.abs_tol = 1e-16;
    tight.rel_tol = 1e-16;
    const auto wiggly = RadialProfile::callable([](double t) { return cplx(std::cos(30 * t)); }, 0.0, 1.0, "cos");
    const CriterionReport rep = functional_equation_residuals(wiggly, zsym(), SobolevOrder(0.0), 2, tight);
    CHECK(rep.verdict.kind == Verdict::Kind::inconclusive);
    bool noted = false;
    for (const auto &[idx, cell] : rep.cells)
      noted = noted || !cell.ok();
    CHECK(noted);
  }
}

TEST_CASE("commutator cross-check") {
  const auto r2 = RadialProfile::monomial(2.0);
  for (double s : {0.0, 1.0}) {
    const auto res = commutator_cross_check(r2, zsym(), SobolevOrder(s), 6, quad);
    CHECK(res.count({1, 0}) == 1);
    for (const auto &[idx, d] : res)
      CHECK(d < 1e-12);
  }
  const SymbolSpec z2({{2, RadialProfile::monomial(2.0)}}, "z^2");
  const auto res = commutator_cross_check(r2, z2, SobolevOrder(0.0), 5, quad);
  CHECK(res.at({2, 0}) < 1e-12);
  const TruncatedOperator C = commutator(toeplitz_matrix(SymbolSpec::radial(r2, "u"), SobolevOrder(0.0), 4, quad),
                                         toeplitz_matrix(z2, SobolevOrder(0.0), 4, quad));
  CHECK(std::abs(C.entries(2, 0)) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-13));
  const auto radial = commutator_cross_check(
      r2, SymbolSpec::radial(RadialProfile::monomial(4.0), "r4"), SobolevOrder(0.0), 5, quad);
  for (const auto &[idx, d] : radial)
    CHECK(d == 0.0);
  CHECK_THROWS_AS(commutator_cross_check(r2, SymbolSpec({{3, RadialProfile::monomial(3.0)}}, "z3"),
                                         SobolevOrder(0.0), 3, quad),
                  PreconditionError);
}

TEST_CASE("moment vanishing probe") {
  const std::vector<int> ks = {1, 2, 3};
  for (const auto &p : moment_vanishing_probe(RadialProfile::zero(), 1.0, ks, quad)) {
    CHECK(p.value == cplx(0.0));
    CHECK(p.below_tolerance);
  }
  const auto ones = moment_vanishing_probe(RadialProfile::monomial(0.0), 1.0, ks, quad);
  for (const auto &p : ones) {
    CHECK(p.value.real() == doctest::Approx(std::tgamma(p.k + 1.0)).epsilon(1e-12));
    CHECK_FALSE(p.below_tolerance);
  }
  const std::vector<int> one = {1};
  const auto lin = moment_vanishing_probe(RadialProfile::polynomial({1.0, -1.0}), 1.0, one, quad);
  CHECK(lin[0].value.real() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(lin[0].below_tolerance);
  CHECK_THROWS_AS(moment_vanishing_probe(RadialProfile::monomial(0.0), 2.5, ks, quad), DomainError);
  const std::vector<int> zero = {0};
  CHECK_THROWS_AS(moment_vanishing_probe(RadialProfile::monomial(0.0), 1.0, zero, quad), DomainError);
}

TEST_CASE("periodicity probe") {
  const std::vector<double> grid = {0.0, 0.5, 1.0};
  const PeriodicityProbe c = periodicity_probe(RadialProfile::monomial(0.0, 4.0), SobolevOrder(0.3), 2, grid, quad);
  CHECK(c.max_abs_difference <= 3.0 * c.error_bar);
  const PeriodicityProbe r = periodicity_probe(RadialProfile::monomial(2.0), SobolevOrder(0.0), 1, grid, quad);
  CHECK(r.max_abs_difference == doctest::Approx(0.159154943091895336).epsilon(1e-12));
  const std::vector<double> bad = {-1.5};
  CHECK_THROWS_AS(periodicity_probe(RadialProfile::monomial(2.0), SobolevOrder(0.0), 1, bad, quad), DomainError);
  CHECK_THROWS_AS(periodicity_probe(RadialProfile::monomial(2.0), SobolevOrder(0.0), 0, grid, quad), DomainError);
}

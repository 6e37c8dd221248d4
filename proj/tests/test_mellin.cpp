#include <doctest.h>

#include "fock/errors.hpp"
#include "fock/mellin.hpp"
#include "fock/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace fock;

TEST_CASE("Mellin transform of G is Gamma(z) / (2 pi) at even arguments") {
  const QuadratureSpec quad;
  for (int z = 1; z <= 10; ++z) {
    const MellinValue m = mellin_weighted(RadialProfile::monomial(0.0), SobolevOrder(0.0), 2.0 * z, quad);
    CHECK(m.value.real() == doctest::Approx(std::tgamma(z) / (2.0 * std::numbers::pi)).epsilon(1e-13));
  }
}

TEST_CASE("monomial closed form versus quadrature at fractional data") {
  const QuadratureSpec quad;
  const SobolevOrder s(0.7);
  const MellinValue m = mellin_weighted(RadialProfile::monomial(1.5, cplx(0.0, 2.0)), s, 3.3, quad);
  const cplx exact = cplx(0.0, 2.0) * mellin_monomial_closed_form(1.5, s, 3.3);
  CHECK(std::abs(m.value - exact) <= 1e-12 * std::abs(exact));
  CHECK(exact.imag() == doctest::Approx(2.0 * std::tgamma(3.1) / (2.0 * std::numbers::pi)));
}

TEST_CASE("shift relation: order s is the s = 0 transform at zeta + 2s") {
  const QuadratureSpec quad;
  const auto v = RadialProfile::callable([](double t) { return cplx(std::exp(-t)); }, 0.0, 1.0, "exp(-r)");
  const cplx a = mellin_weighted(v, SobolevOrder(0.7), 3.0, quad).value;
  const cplx b = mellin_weighted(v, SobolevOrder(0.0), 4.4, quad).value;
  CHECK(std::abs(a - b) < 1e-14);
  // mpmath, 30 digits
  CHECK(a.real() == doctest::Approx(0.0481830944603728845).epsilon(1e-12));
  const double trap = oracle::trapezoid_gaussian_moment([](double t) { return std::exp(-t); },
                                                        4.4, 10.0, 100000) / std::numbers::pi;
  CHECK(a.real() == doctest::Approx(trap).epsilon(1e-9));
}

TEST_CASE("Mellin transform is linear") {
  const QuadratureSpec quad;
  const SobolevOrder s(1.0);
  const auto p = RadialProfile::polynomial({1.0, cplx(0.0, -2.0), 3.0});
  cplx expected = mellin_monomial_closed_form(0.0, s, 5.0) +
                  cplx(0.0, -2.0) * mellin_monomial_closed_form(1.0, s, 5.0) +
                  3.0 * mellin_monomial_closed_form(2.0, s, 5.0);
  CHECK(std::abs(mellin_weighted(p, s, 5.0, quad).value - expected) < 1e-12 * std::abs(expected));
}

TEST_CASE("Mellin domain and zero profile") {
  const QuadratureSpec quad;
  CHECK_THROWS_AS(mellin_weighted(RadialProfile::monomial(1.0), SobolevOrder(0.0), 0.0, quad),
                  DomainError);
  CHECK_THROWS_AS(mellin_weighted(RadialProfile::monomial(1.0), SobolevOrder(0.5), -1.0, quad),
                  DomainError);
  CHECK_NOTHROW(mellin_weighted(RadialProfile::monomial(1.0), SobolevOrder(0.5), -0.5, quad));
  const MellinValue z = mellin_weighted(RadialProfile::zero(), SobolevOrder(0.0), 2.0, quad);
  CHECK(z.value == cplx(0.0));
  CHECK_THROWS_AS(mellin_monomial_closed_form(0.0, SobolevOrder(0.0), -1.0), DomainError);
}

TEST_CASE("declared growth widens the cutoff so large exponents converge") {
  const QuadratureSpec quad;
  const MellinValue m = mellin_weighted(RadialProfile::monomial(6.0), SobolevOrder(2.3), 60.0, quad);
  const cplx exact = mellin_monomial_closed_form(6.0, SobolevOrder(2.3), 60.0);
  CHECK(std::abs(m.value - exact) <= 1e-11 * std::abs(exact));
}

#include <doctest.h>

#include "fock/errors.hpp"
#include "fock/fock_space.hpp"
#include "fock/oracles.hpp"

#include <cmath>
#include <numbers>

using namespace fock;

TEST_CASE("SobolevOrder rejects negative orders") {
  CHECK_THROWS_AS(SobolevOrder(-0.1), DomainError);
  CHECK(SobolevOrder(2.3).value() == 2.3);
}

TEST_CASE("density") {
  CHECK(density(0.0, SobolevOrder(0.0)) == doctest::Approx(1.0 / std::numbers::pi));
  CHECK(density(0.0, SobolevOrder(1.0)) == 0.0);
  CHECK(density(cplx(0.0, 2.0), SobolevOrder(1.0)) ==
        doctest::Approx(4.0 * std::exp(-4.0) / std::numbers::pi));
}

TEST_CASE("basis norms are Gamma(s + n + 1) and match disk moments") {
  CHECK(basis_norm_sq(0, SobolevOrder(0.0)) == doctest::Approx(1.0));
  CHECK(basis_norm_sq(3, SobolevOrder(0.0)) == doctest::Approx(6.0));
  CHECK(basis_norm_sq(2, SobolevOrder(0.5)) == doctest::Approx(std::tgamma(3.5)));
  for (int n : {0, 1, 4})
    for (double s : {0.0, 0.5, 1.0})
      CHECK(basis_norm_sq(n, SobolevOrder(s)) ==
            doctest::Approx(oracle::disk_moment(n, s, 12.0, 4000)).epsilon(1e-8));
  CHECK_THROWS_AS(basis_norm_sq(-1, SobolevOrder(0.0)), DomainError);
}

TEST_CASE("kernel at s = 0 is exp(z conj w)") {
  const cplx z(0.7, -1.1), w(-0.4, 1.5);
  const KernelValue k = kernel_eval(z, w, SobolevOrder(0.0), 1e-15);
  CHECK(std::abs(k.value - std::exp(z * std::conj(w))) < 1e-13);
  CHECK(k.tail_bound <= 1e-15);
}

TEST_CASE("kernel at s = 1, z = w = 2 is (e^4 - 1) / 4") {
  const KernelValue k = kernel_eval(2.0, 2.0, SobolevOrder(1.0), 1e-14);
  CHECK(k.value.real() == doctest::Approx(13.3995375082860598).epsilon(1e-14));
  CHECK(k.value.imag() == 0.0);
}

TEST_CASE("kernel at s = 0.5 against an independent partial sum") {
  const cplx x(1.3, 0.4);
  const KernelValue k = kernel_eval(x, 1.0, SobolevOrder(0.5), 1e-15);
  CHECK(std::abs(k.value - oracle::kernel_partial_sum(x, 0.5, 60)) < 1e-13);
  // mpmath, 30 digits
  CHECK(std::abs(k.value - cplx(2.72611406313624638, 0.863514898678605702)) < 1e-14);
}

TEST_CASE("kernel is Hermitian and norms agree") {
  const cplx z(1.2, 0.3), w(-0.5, 0.9);
  const SobolevOrder s(0.7);
  const cplx a = kernel_eval(z, w, s, 1e-14).value;
  const cplx b = kernel_eval(w, z, s, 1e-14).value;
  CHECK(std::abs(a - std::conj(b)) < 1e-13);
  const double n = kernel_norm(z, s, 1e-14);
  CHECK(n * n == doctest::Approx(kernel_eval(z, z, s, 1e-14).value.real()));
}

TEST_CASE("kernel term cap raises ResourceError") {
  CHECK_THROWS_AS(kernel_eval(30.0, 30.0, SobolevOrder(0.0), 1e-14, 50), ResourceError);
  CHECK_THROWS_AS(kernel_eval(1.0, 1.0, SobolevOrder(0.0), 0.0), DomainError);
}

#pragma once

#include "fock/special_functions.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fock {

/// Exponents (rho, eta) of the class of half-line functions with
/// |u(1/x) x^{-rho}| = O(1) and |u(x) x^{-eta}| = O(1) for x >= 1.
/// Carried as declared metadata; never verified.
struct ClassAExponents {
  double rho = 0.0;
  double eta = 0.0;
};

/// A radial function r -> v(r) on (0, inf) with declared polynomial growth
/// |v(r)| <= growth_constant * (1 + r)^growth_exponent.
///
/// Cheap to copy; callable profiles share their evaluator.
class RadialProfile {
public:
  enum class Kind { zero, monomial, polynomial, callable };

  /// The zero profile.
  RadialProfile();

  static RadialProfile zero() { return {}; }
  /// coeff * r^p, p >= 0.
  static RadialProfile monomial(double p, cplx coeff = 1.0);
  /// sum_k coefficients[k] * r^k.
  static RadialProfile polynomial(std::vector<cplx> coefficients);
  /// Arbitrary evaluator with caller-declared growth (m, C).
  static RadialProfile callable(std::function<cplx(double)> fn,
                                double growth_exponent, double growth_constant,
                                std::string description);

  cplx operator()(double r) const;

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::zero; }
  double growth_exponent() const noexcept { return growth_exponent_; }
  double growth_constant() const noexcept { return growth_constant_; }
  GrowthBound growth() const noexcept { return {growth_constant_, growth_exponent_}; }
  const std::string &description() const noexcept { return description_; }

  /// Power p when the profile is c * r^p.
  std::optional<double> monomial_power() const;
  /// Coefficient c when the profile is c * r^p.
  std::optional<cplx> monomial_coefficient() const;
  /// Coefficients when the profile is a polynomial (monomials with integer
  /// power included).
  std::optional<std::vector<cplx>> polynomial_coefficients() const;

  /// True when the profile is a nonzero constant function.
  bool is_constant() const;

  RadialProfile conjugated() const;
  RadialProfile scaled(cplx factor) const;

  ClassAExponents class_a() const noexcept { return class_a_; }
  RadialProfile with_class_a(ClassAExponents e) const;

  /// Checks |v(r)| <= C (1 + r)^m on the grid r = 0.05, 0.10, ..., r_max.
  bool satisfies_growth_bound(double r_max = 50.0) const;

private:
  Kind kind_;
  double power_ = 0.0;
  std::vector<cplx> coeffs_; // monomial: {c}; polynomial: c_k
  std::shared_ptr<const std::function<cplx(double)>> fn_;
  double growth_exponent_ = 0.0;
  double growth_constant_ = 1.0;
  ClassAExponents class_a_{};
  std::string description_;
};

} // namespace fock

#include "fock/profile.hpp"

#include "fock/errors.hpp"

#include <cmath>
#include <sstream>

namespace fock {

RadialProfile::RadialProfile() : kind_(Kind::zero), description_("0") {}

RadialProfile RadialProfile::monomial(double p, cplx coeff) {
  if (!(p >= 0.0) || !std::isfinite(p))
    throw DomainError("RadialProfile::monomial: power must be finite and >= 0");
  if (coeff == 0.0)
    return {};
  RadialProfile out;
  out.kind_ = Kind::monomial;
  out.power_ = p;
  out.coeffs_ = {coeff};
  out.growth_exponent_ = p;
  out.growth_constant_ = std::abs(coeff);
  out.class_a_ = {0.0, p};
  std::ostringstream d;
  d << "(" << coeff.real() << (coeff.imag() < 0 ? "" : "+") << coeff.imag()
    << "i)*r^" << p;
  out.description_ = d.str();
  return out;
}

RadialProfile RadialProfile::polynomial(std::vector<cplx> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0.0)
    coefficients.pop_back();
  if (coefficients.empty())
    return {};
  RadialProfile out;
  out.kind_ = Kind::polynomial;
  out.coeffs_ = std::move(coefficients);
  out.growth_exponent_ = static_cast<double>(out.coeffs_.size() - 1);
  double c = 0.0;
  for (const auto &a : out.coeffs_)
    c += std::abs(a);
  out.growth_constant_ = c;
  out.class_a_ = {0.0, out.growth_exponent_};
  std::ostringstream d;
  d << "poly[";
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k)
    d << (k ? "," : "") << out.coeffs_[k].real() << (out.coeffs_[k].imag() < 0 ? "" : "+")
      << out.coeffs_[k].imag() << "i";
  d << "]";
  out.description_ = d.str();
  return out;
}

RadialProfile RadialProfile::callable(std::function<cplx(double)> fn,
                                      double growth_exponent,
                                      double growth_constant,
                                      std::string description) {
  if (!fn)
    throw DomainError("RadialProfile::callable: empty evaluator");
  if (!(growth_exponent >= 0.0) || !(growth_constant > 0.0))
    throw DomainError("RadialProfile::callable: growth exponent must be >= 0 "
                      "and constant > 0");
  RadialProfile out;
  out.kind_ = Kind::callable;
  out.fn_ = std::make_shared<const std::function<cplx(double)>>(std::move(fn));
  out.growth_exponent_ = growth_exponent;
  out.growth_constant_ = growth_constant;
  out.class_a_ = {0.0, growth_exponent};
  out.description_ = std::move(description);
  return out;
}

cplx RadialProfile::operator()(double r) const {
  switch (kind_) {
  case Kind::zero:
    return 0.0;
  case Kind::monomial:
    return coeffs_[0] * std::pow(r, power_);
  case Kind::polynomial: {
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * r + *it;
    return acc;
  }
  case Kind::callable:
    return (*fn_)(r);
  }
  return 0.0;
}

std::optional<double> RadialProfile::monomial_power() const {
  if (kind_ == Kind::monomial)
    return power_;
  if (kind_ == Kind::polynomial) {
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k)
      if (coeffs_[k] != 0.0)
        return std::nullopt;
    return static_cast<double>(coeffs_.size() - 1);
  }
  return std::nullopt;
}

std::optional<cplx> RadialProfile::monomial_coefficient() const {
  if (!monomial_power())
    return std::nullopt;
  return kind_ == Kind::monomial ? coeffs_[0] : coeffs_.back();
}

std::optional<std::vector<cplx>> RadialProfile::polynomial_coefficients() const {
  if (kind_ == Kind::polynomial)
    return coeffs_;
  if (kind_ == Kind::monomial && power_ == std::floor(power_)) {
    std::vector<cplx> c(static_cast<std::size_t>(power_) + 1, 0.0);
    c.back() = coeffs_[0];
    return c;
  }
  return std::nullopt;
}

bool RadialProfile::is_constant() const {
  if (kind_ == Kind::monomial)
    return power_ == 0.0;
  if (kind_ == Kind::polynomial)
    return coeffs_.size() == 1;
  return false;
}

RadialProfile RadialProfile::conjugated() const {
  RadialProfile out = *this;
  for (auto &c : out.coeffs_)
    c = std::conj(c);
  if (kind_ == Kind::callable) {
    auto inner = fn_;
    out.fn_ = std::make_shared<const std::function<cplx(double)>>(
        [inner](double r) { return std::conj((*inner)(r)); });
    out.description_ = "conj(" + description_ + ")";
  } else if (kind_ != Kind::zero) {
    out.description_ = "conj(" + description_ + ")";
  }
  return out;
}

RadialProfile RadialProfile::scaled(cplx factor) const {
  if (factor == 0.0 || kind_ == Kind::zero)
    return {};
  RadialProfile out = *this;
  for (auto &c : out.coeffs_)
    c *= factor;
  if (kind_ == Kind::callable) {
    auto inner = fn_;
    out.fn_ = std::make_shared<const std::function<cplx(double)>>(
        [inner, factor](double r) { return factor * (*inner)(r); });
  }
  out.growth_constant_ *= std::abs(factor);
  std::ostringstream d;
  d << "(" << factor.real() << (factor.imag() < 0 ? "" : "+") << factor.imag()
    << "i)*" << description_;
  out.description_ = d.str();
  return out;
}

RadialProfile RadialProfile::with_class_a(ClassAExponents e) const {
  RadialProfile out = *this;
  out.class_a_ = e;
  return out;
}

bool RadialProfile::satisfies_growth_bound(double r_max) const {
  if (kind_ == Kind::zero)
    return true;
  const int steps = static_cast<int>(std::ceil(r_max / 0.05));
  for (int i = 1; i <= steps; ++i) {
    const double r = 0.05 * i;
    const double bound = growth_constant_ * std::pow(1.0 + r, growth_exponent_);
    if (std::abs((*this)(r)) > bound * (1.0 + 1e-12))
      return false;
  }
  return true;
}

} // namespace fock

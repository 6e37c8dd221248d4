#include "fock/symbols.hpp"

#include "fock/errors.hpp"
#include "fock/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fock {

SymbolSpec::SymbolSpec(std::map<int, RadialProfile> modes, std::string name)
    : name_(std::move(name)) {
  for (auto &[j, v] : modes)
    if (!v.is_zero())
      modes_.emplace(j, std::move(v));
}

SymbolSpec SymbolSpec::radial(RadialProfile v0, std::string name) {
  return SymbolSpec({{0, std::move(v0)}}, std::move(name));
}

bool SymbolSpec::is_radial() const {
  return std::all_of(modes_.begin(), modes_.end(),
                     [](const auto &kv) { return kv.first == 0; });
}

int SymbolSpec::max_abs_mode() const {
  int m = 0;
  for (const auto &[j, v] : modes_)
    m = std::max(m, std::abs(j));
  return m;
}

RadialProfile SymbolSpec::mode(int j) const {
  auto it = modes_.find(j);
  return it == modes_.end() ? RadialProfile::zero() : it->second;
}

SymbolSpec SymbolSpec::conjugated() const {
  std::map<int, RadialProfile> out;
  for (const auto &[j, v] : modes_)
    out.emplace(-j, v.conjugated());
  return SymbolSpec(std::move(out), "conj(" + name_ + ")");
}

cplx evaluate(const SymbolSpec &spec, cplx z) {
  const double r = std::abs(z);
  if (r == 0.0) {
    cplx value = 0.0;
    for (const auto &[j, v] : spec.modes()) {
      const cplx at0 = v(0.0);
      if (j == 0) {
        value += at0;
      } else if (at0 != 0.0) {
        std::ostringstream msg;
        msg << "evaluate: mode " << j << " of '" << spec.name()
            << "' does not vanish at z = 0, so the angle is needed";
        throw DomainError(msg.str());
      }
    }
    return value;
  }
  const double theta = std::arg(z);
  cplx value = 0.0;
  for (const auto &[j, v] : spec.modes())
    value += v(r) * std::polar(1.0, j * theta);
  return value;
}

double PolarSamples::angle(int k) const {
  return 2.0 * std::numbers::pi * k / angle_count;
}

PolarSamples sample_polar(const std::function<cplx(cplx)> &u,
                          std::vector<double> radii, int angle_count) {
  if (angle_count < 1)
    throw PreconditionError("sample_polar: need at least one angle");
  PolarSamples out;
  out.radii = std::move(radii);
  out.angle_count = angle_count;
  out.values.reserve(out.radii.size() * angle_count);
  for (double r : out.radii)
    for (int k = 0; k < angle_count; ++k)
      out.values.push_back(u(std::polar(r, out.angle(k))));
  return out;
}

PolarSamples sample_polar(const SymbolSpec &spec, std::vector<double> radii,
                          int angle_count) {
  return sample_polar([&spec](cplx z) { return evaluate(spec, z); },
                      std::move(radii), angle_count);
}

SymbolSpec decompose(const PolarSamples &samples, int j_max, double drop_floor,
                     std::string name) {
  if (j_max < 1)
    throw PreconditionError("decompose: j_max must be positive");
  const int M = samples.angle_count;
  if (M < 2 * j_max + 2) {
    std::ostringstream msg;
    msg << "decompose: " << M << " angles cannot resolve modes up to |j| = "
        << j_max << "; need at least " << 2 * j_max + 2 << " angles";
    throw PreconditionError(msg.str());
  }
  const std::size_t R = samples.radii.size();
  if (R == 0 || samples.values.size() != R * static_cast<std::size_t>(M))
    throw PreconditionError("decompose: sample array does not match the grid");
  for (std::size_t i = 0; i < R; ++i) {
    if (!(samples.radii[i] > 0.0) || (i > 0 && !(samples.radii[i] > samples.radii[i - 1])))
      throw PreconditionError("decompose: radii must be positive and strictly increasing");
  }

  std::map<int, RadialProfile> modes;
  for (int j = -j_max; j <= j_max; ++j) {
    std::vector<cplx> coeff(R);
    double peak = 0.0;
    for (std::size_t i = 0; i < R; ++i) {
      cplx acc = 0.0;
      for (int k = 0; k < M; ++k)
        acc += samples.at(i, k) * std::polar(1.0, -j * samples.angle(k));
      coeff[i] = acc / static_cast<double>(M);
      peak = std::max(peak, std::abs(coeff[i]));
    }
    if (peak < drop_floor)
      continue;

    auto spline = std::make_shared<const CubicSpline>(samples.radii, coeff);
    // Cubic continuation past the grid: bound by (1 + r)^3 with headroom.
    double c = 0.0;
    const double r_end = 2.0 * samples.radii.back();
    for (int i = 0; i <= 400; ++i) {
      const double r = r_end * i / 400.0;
      c = std::max(c, std::abs((*spline)(r)) / std::pow(1.0 + r, 3.0));
    }
    std::ostringstream d;
    d << "tabulated(j=" << j << ", " << R << " radii)";
    modes.emplace(j, RadialProfile::callable(
                         [spline](double r) { return (*spline)(r); }, 3.0,
                         std::max(1.1 * c, 1e-300), d.str()));
  }
  return SymbolSpec(std::move(modes), std::move(name));
}

RadialGrid radial_quadrature_grid(double R, int panels, int order) {
  if (!(R > 0.0) || panels < 1 || order < 1)
    throw PreconditionError("radial_quadrature_grid: need R > 0, panels >= 1, order >= 1");
  const QuadratureRule gl = gauss_legendre(order);
  RadialGrid grid;
  const double h = R / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < order; ++i) {
      grid.nodes.push_back(mid + 0.5 * h * gl.nodes[i]);
      grid.weights.push_back(0.5 * h * gl.weights[i]);
    }
  }
  return grid;
}

double l2_norm_sq(const std::function<cplx(cplx)> &f, SobolevOrder s,
                  const RadialGrid &grid, int angle_count) {
  if (angle_count < 1)
    throw PreconditionError("l2_norm_sq: need at least one angle");
  const double dtheta = 2.0 * std::numbers::pi / angle_count;
  double total = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double r = grid.nodes[i];
    double ring = 0.0;
    for (int k = 0; k < angle_count; ++k)
      ring += std::norm(f(std::polar(r, k * dtheta)));
    const double radial_weight =
        std::exp((2.0 * s.value() + 1.0) * std::log(r) - r * r);
    total += grid.weights[i] * radial_weight * ring * dtheta;
  }
  return total * std::numbers::inv_pi;
}

double dpoly_norm_estimate(const SymbolSpec &spec, SobolevOrder s, double epsilon,
                           const std::vector<double> &radii, int angle_count) {
  if (!(epsilon >= 0.0))
    throw DomainError("dpoly_norm_estimate: epsilon must be nonnegative");
  if (radii.empty())
    throw PreconditionError("dpoly_norm_estimate: empty radial grid");
  double best = 0.0;
  for (double r : radii) {
    const double weight = std::pow(1.0 + r, s.value()) * std::exp(-epsilon * r * r);
    for (int k = 0; k < angle_count; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angle_count;
      best = std::max(best, std::abs(evaluate(spec, std::polar(r, theta))) * weight);
    }
  }
  return best;
}

GrowthFit fit_growth(const SymbolSpec &spec, const std::vector<double> &radii,
                     int max_exponent, int angle_count) {
  if (radii.empty())
    throw PreconditionError("fit_growth: empty radial grid");
  std::vector<double> sorted = radii;
  std::sort(sorted.begin(), sorted.end());

  // Angular maximum of |u| on each ring.
  std::vector<double> ring_max(sorted.size(), 0.0);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (int k = 0; k < angle_count; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angle_count;
      ring_max[i] = std::max(ring_max[i], std::abs(evaluate(spec, std::polar(sorted[i], theta))));
    }

  const std::size_t split = std::max<std::size_t>(1, sorted.size() / 2);
  for (int m = 0; m <= max_exponent; ++m) {
    double inner = 0.0, outer = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const double ratio = ring_max[i] / std::pow(1.0 + sorted[i], m);
      double &slot = i < split ? inner : outer;
      slot = std::max(slot, ratio);
    }
    if (outer <= 1.1 * inner)
      return {1.1 * std::max(inner, outer), static_cast<double>(m)};
  }
  std::ostringstream msg;
  msg << "fit_growth: samples of '" << spec.name()
      << "' outgrow (1 + |z|)^m for every m <= " << max_exponent
      << "; symbol is not of polynomial growth on this grid";
  throw ClassificationError(msg.str());
}

} // namespace fock

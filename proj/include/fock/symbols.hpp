#pragma once

#include "fock/fock_space.hpp"
#include "fock/profile.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fock {

/// Finite Fourier-radial expansion u(r e^{i theta}) = sum_j v_j(r) e^{i j theta}.
///
/// Zero profiles are never stored, so an empty mode map is the zero symbol
/// and a symbol is radial exactly when its modes are a subset of {0}.
class SymbolSpec {
public:
  SymbolSpec() = default;
  SymbolSpec(std::map<int, RadialProfile> modes, std::string name);

  static SymbolSpec radial(RadialProfile v0, std::string name);

  const std::map<int, RadialProfile> &modes() const noexcept { return modes_; }
  const std::string &name() const noexcept { return name_; }

  bool is_radial() const;
  bool is_zero() const noexcept { return modes_.empty(); }
  /// max |j| over stored modes (0 for the zero symbol).
  int max_abs_mode() const;
  /// Profile of mode j, or the zero profile.
  RadialProfile mode(int j) const;

  /// conj(u): mode j becomes -j with a conjugated profile.
  SymbolSpec conjugated() const;

private:
  std::map<int, RadialProfile> modes_;
  std::string name_;
};

/// u(z) = sum_j v_j(|z|) e^{i j arg z}. At z = 0 only the radial mode is
/// used; a nonradial mode with v_j(0) != 0 makes the value undefined there
/// (DomainError).
cplx evaluate(const SymbolSpec &spec, cplx z);

/// Samples on a tensor polar grid: radii r_i (strictly increasing, > 0) and
/// angles theta_k = 2 pi k / angle_count. values[i * angle_count + k] holds
/// u(r_i e^{i theta_k}).
struct PolarSamples {
  std::vector<double> radii;
  int angle_count = 0;
  std::vector<cplx> values;

  double angle(int k) const;
  cplx at(std::size_t i, int k) const { return values[i * angle_count + k]; }
};

PolarSamples sample_polar(const std::function<cplx(cplx)> &u,
                          std::vector<double> radii, int angle_count);
PolarSamples sample_polar(const SymbolSpec &spec, std::vector<double> radii,
                          int angle_count);

inline constexpr double kModeDropFloor = 1e-12;

/// Per-radius discrete Fourier coefficients v_j(r_i) = (1/M) sum_k u e^{-i j theta_k}
/// for |j| <= j_max, attached as not-a-knot cubic splines in r. Modes whose
/// magnitude stays below drop_floor at every radius are dropped.
///
/// Requires angle_count >= 2 j_max + 2 (PreconditionError naming the
/// required count otherwise).
SymbolSpec decompose(const PolarSamples &samples, int j_max,
                     double drop_floor = kModeDropFloor,
                     std::string name = "decomposed");

/// Radial rule for integrals over (0, R]: composite Gauss-Legendre nodes and
/// weights. Nodes never include r = 0, so they double as sampling radii for
/// decompose.
struct RadialGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
};

RadialGrid radial_quadrature_grid(double R, int panels, int order);

/// ||f||^2 in L^2(G_s dA) with the radial rule `grid` and an angle_count-point
/// trapezoid rule in theta.
double l2_norm_sq(const std::function<cplx(cplx)> &f, SobolevOrder s,
                  const RadialGrid &grid, int angle_count);

/// Lower estimate of the D^s_eps norm: max over the polar grid (radii x
/// angle_count angles) of |u(z)| (1 + |z|)^s e^{-eps |z|^2}.
double dpoly_norm_estimate(const SymbolSpec &spec, SobolevOrder s, double epsilon,
                           const std::vector<double> &radii, int angle_count = 64);

struct GrowthFit {
  double constant = 0.0;
  double exponent = 0.0;
};

/// Fits |u(z)| <= C (1 + |z|)^m with the smallest m in {0, 1, ..., max_exponent}.
///
/// A ladder member fits when the ratio |u| / (1 + r)^m over the outer half of
/// the radial grid stays within 10% of its maximum over the inner half, i.e.
/// the bound established near the origin carries to the end of the grid.
/// C is the grid maximum of that ratio with 10% headroom. Throws
/// ClassificationError when no member fits (super-polynomial samples).
GrowthFit fit_growth(const SymbolSpec &spec, const std::vector<double> &radii,
                     int max_exponent = 24, int angle_count = 64);

} // namespace fock

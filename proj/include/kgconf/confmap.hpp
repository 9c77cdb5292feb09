#pragma once

// Isometric conformal map z = x, s = t - i (hbar/E) [a ln r + (r/b)^lambda]
// and the complex-coordinate derivative operators it induces in x-space:
//   d/dz_i  = d/dx_i + i g_i(x) d/dt,   d/dz*_i = d/dx_i - i g_i(x) d/dt,
//   g_i = (x_i / r^2) [a + lambda (r/b)^lambda] hbar / E.

#include <array>
#include <cmath>
#include <limits>
#include <span>

#include "kgconf/core.hpp"
#include "kgconf/diffengine.hpp"
#include "kgconf/field.hpp"
#include "kgconf/kernels.hpp"
#include "kgconf/linear_operator.hpp"
#include "kgconf/report.hpp"

namespace kgconf {

struct ConformalMap {
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();  // +inf: no r^lambda term
  double lambda = 2.0;
  double energy = 1.0;
  UnitSystem units = natural_units();

  /// Validated construction: b > 0 (may be +inf), lambda > 0, E > 0.
  static ConformalMap make(double a, double b, double lambda, double energy,
                           UnitSystem units = natural_units());
  /// a = 0, b = inf: z = x, s = t.
  static ConformalMap identity(double energy, UnitSystem units = natural_units());

  bool singular_at_origin() const { return a != 0.0; }
  double inverse_b() const { return 1.0 / b; }

  /// a ln r + (r/b)^lambda written through r^2 so the oscillator map stays
  /// smooth at the origin.
  template <class S>
  S radial_profile(const S& r2) const {
    using std::log;
    using std::pow;
    using std::sqrt;
    S out(0.0);
    if (a != 0.0) out = out + (0.5 * a) * log(r2);
    const double ib = inverse_b();
    if (ib != 0.0) {
      if (lambda == 2.0)
        out = out + (ib * ib) * r2;
      else if (lambda == 1.0)
        out = out + ib * sqrt(r2);
      else
        out = out + std::pow(ib, lambda) * pow(r2, 0.5 * lambda);
    }
    return out;
  }

  /// Imaginary time displacement tau(r) = -(hbar/E) [a ln r + (r/b)^lambda].
  double tau(double r) const;

  template <class S>
  S complex_time(const Coords<S>& x, const S& t) const {
    const S r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return t - (kI * (units.hbar / energy)) * radial_profile(r2);
  }
  template <class S>
  S conjugate_time(const Coords<S>& x, const S& t) const {
    const S r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return t + (kI * (units.hbar / energy)) * radial_profile(r2);
  }

  /// Real weights g_i of the d/dt term.
  template <class S>
  Coords<S> chain_weights(const Coords<S>& x) const {
    using std::pow;
    using std::sqrt;
    const S r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    S w(0.0);
    if (a != 0.0) w = w + a / r2;
    const double ib = inverse_b();
    if (ib != 0.0) {
      if (lambda == 2.0)
        w = w + 2.0 * ib * ib;
      else if (lambda == 1.0)
        w = w + ib / sqrt(r2);
      else
        w = w + (lambda * std::pow(ib, lambda)) * pow(r2, 0.5 * lambda - 1.0);
    }
    w = w * (units.hbar / energy);
    return {x[0] * w, x[1] * w, x[2] * w};
  }

  Vec3 chain_weights(const Vec3& x) const;
  /// d g_i / d x_i, per component, by forward-mode differentiation.
  Vec3 chain_weight_divergence(const Vec3& x) const;
};

ComplexPoint forward(const ConformalMap& map, const SpaceTimePoint& p);
/// Conjugate representation: z* = x, s* = conj(s).
ComplexPoint forward_conjugate(const ConformalMap& map, const SpaceTimePoint& p);
/// t = s + i (hbar/E) [a ln r_z + (r_z/b)^lambda], before discarding the
/// (rounding-level) imaginary part.
cplx inverse_time(const ConformalMap& map, const ComplexPoint& q);
cplx inverse_conjugate_time(const ConformalMap& map, const ComplexPoint& q);
SpaceTimePoint inverse(const ConformalMap& map, const ComplexPoint& q);
SpaceTimePoint inverse_conjugate(const ConformalMap& map, const ComplexPoint& q);

/// d/dz_i and d/dz*_i as x-space operators (component i in 0..2).
LinearOperator dz_operator(const ConformalMap& map, int i);
LinearOperator dzstar_operator(const ConformalMap& map, int i);

Estimate d_z(const ConformalMap& map, const ComplexField& f,
             const SpaceTimePoint& p, int i, const DiffConfig& cfg);
Estimate d_zstar(const ConformalMap& map, const ComplexField& f,
                 const SpaceTimePoint& p, int i, const DiffConfig& cfg);
std::array<cplx, 3> d_z(const ConformalMap& map, const ComplexField& f,
                        const SpaceTimePoint& p, const DiffConfig& cfg);
std::array<cplx, 3> d_zstar(const ConformalMap& map, const ComplexField& f,
                            const SpaceTimePoint& p, const DiffConfig& cfg);

enum class Composition {
  zstar_after_z,  // d/dz*_i (d/dz_i psi): the order used throughout
  z_after_zstar,  // reversed; kept for the order-sensitivity probe
};

/// d/dz*_i d/dz_i for one axis, expanded by the chain rule:
///   d_i^2 + i (d_i g_i) d_t + g_i^2 d_t^2   (sign of the middle term flips
/// for the reversed order).
LinearOperator complex_second_operator(const ConformalMap& map, int i,
                                       Composition order = Composition::zstar_after_z);
/// Sum over i of the above.
LinearOperator complex_laplacian_operator(
    const ConformalMap& map, Composition order = Composition::zstar_after_z);

Estimate complex_laplacian(const ConformalMap& map, const ComplexField& f,
                           const SpaceTimePoint& p, const DiffConfig& cfg);

/// Fields s(x,t), s*(x,t) and z_i(x,t) of the map, for the independence check.
ComplexField complex_time_field(const ConformalMap& map);
ComplexField conjugate_time_field(const ConformalMap& map);
ComplexField coordinate_field(int i);

/// ds/dz_i, ds*/dz*_i, dz_i/ds and dz*_i/ds* over the points. Each case is
/// scaled by max |g_i| (the size of the two cancelling chain-rule terms).
/// Includes a probe applying plain d/dx_i to s, which must not vanish.
ResidualReport independence_check(const ConformalMap& map,
                                  std::span<const SpaceTimePoint> points,
                                  const DiffConfig& cfg, double tolerance,
                                  Execution exec = Execution::parallel);

/// Sampling rectangle in the (t, tau) plane.
struct HolomorphyRegion {
  double t_min = -1.0;
  double t_max = 1.0;
  double tau_min = -1.0;
  double tau_max = 1.0;
  int t_samples = 21;
  int tau_samples = 21;
};

/// Wraps f(s) as a ComplexField over (x1 = tau, t), s = t + i tau.
template <class F>
ComplexField function_of_s(std::string label, F f) {
  return ComplexField::from_generic(std::move(label), [f](const auto& x, const auto& t) {
    return f(t + kI * x[0]);
  });
}

/// max |d^2 f/dt^2 + d^2 f/dtau^2| / max |f| over the region, where the
/// field carries tau in x1 (see function_of_s).
CaseResult holomorphy_residual(const std::string& name, const ComplexField& f_of_t_tau,
                               const HolomorphyRegion& region, const DiffConfig& cfg,
                               double tolerance, Execution exec = Execution::parallel);

}  // namespace kgconf

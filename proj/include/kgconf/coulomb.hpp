#pragma once

// Klein-Gordon particle in a Coulomb field:
//   -hbar^2 c^2 lap psi + m0^2 c^4 psi = (E + hbar c alpha / r)^2 psi.

#include <optional>
#include <span>
#include <string>

#include "kgconf/confmap.hpp"
#include "kgconf/field.hpp"
#include "kgconf/linear_operator.hpp"
#include "kgconf/report.hpp"
#include "kgconf/specfun.hpp"

namespace kgconf::coulomb {

struct Model {
  double alpha = 0.0072973525693;
  UnitSystem units = natural_units();

  /// alpha >= 0; alpha = 0 is accepted for limit checks only.
  static Model make(double alpha, UnitSystem units = natural_units());
};

struct State {
  int n = 0;  // degree of p_n
  int l = 0;
  int k = 0;
  Branch branch = Branch::sommerfeld;

  void validate() const;
  std::string label() const;
};

/// eta_l = 1/2 -+ sqrt((l + 1/2)^2 - alpha^2); minus for sommerfeld.
double eta(const Model& model, int l, Branch branch);
/// 1 - eta_l, evaluated without cancellation.
double one_minus_eta(const Model& model, int l, Branch branch);

/// E_nl = m0 c^2 [1 + alpha^2 / (n + 1 - eta_l)^2]^{-1/2}.
double energy(const Model& model, const State& state);

/// r_nl = hbar c (n + 1 - eta_l) / (alpha E_nl).
double radial_scale(const Model& model, const State& state);

struct MapCoefficients {
  double a = 0.0;  // eta_0 of the state's branch
  double b = 0.0;  // hbar c (1 - eta_0) / (alpha E_nl)
};

MapCoefficients map_coefficients(const Model& model, const State& state);

/// lambda = 1 map with the state's coefficients. Requires alpha > 0.
ConformalMap conformal_map(const Model& model, const State& state);

/// Exponent rate of the transformed radial function in units of 1/r_nl:
/// (n - eta_l + eta_0) / (1 - eta_0). R(r_z) carries exp(+rate r_z / r_nl):
/// multiplied by the map's r^{-a} e^{-r/b} it returns e^{-r/r_nl}.
double transformed_rate(const Model& model, const State& state);

/// E_nl^2 [1 + alpha^2 / (1 - eta_0)^2], the eigenvalue of the transformed
/// equation.
double transformed_eigenvalue(const Model& model, const State& state);

ComplexField eigenfunction_x(const Model& model, const State& state);
/// R(r_z) Y_lk exp(-i E s / hbar) with
/// R(r_z) = r_z^{eta_0 - eta_l} exp(+rate r_z / r_nl) p_n(r_z / r_nl).
ComplexField eigenfunction_z(const Model& model, const State& state);

/// -hbar^2 c^2 lap + m0^2 c^4 - (E + hbar c alpha / r)^2.
LinearOperator kg_operator_x(const Model& model, double energy);
/// -hbar^2 c^2 sum_i d/dz*_i d/dz_i + m0^2 c^4 - eigenvalue, the map being
/// built for `state` with E replaced by `energy`.
LinearOperator kg_operator_z(const Model& model, const State& state, double energy);

struct ResidualOptions {
  std::optional<double> claimed_energy;
  Execution exec = Execution::parallel;
};

CaseResult kg_residual_x(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts = {});
CaseResult kg_residual_z(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts = {});
/// hbar^2 c^2 |sum_i d/dz*_i d/dz_i psi| / (E^2 max|psi|); vanishes for the
/// ground state.
CaseResult complex_laplacian_residual(const Model& model, const State& state,
                                      std::span<const SpaceTimePoint> points,
                                      const DiffConfig& cfg, double tolerance,
                                      Execution exec = Execution::parallel);
CaseResult consistency_residual(const Model& model, const State& state,
                                std::span<const SpaceTimePoint> points, double tolerance,
                                Execution exec = Execution::parallel);

/// Radial equation
///   R'' + 2R'/r - (l(l+1) - alpha^2)/r^2 R + 2 E alpha/(hbar c r) R
///       + (E^2 - m0^2 c^4)/(hbar c)^2 R = 0
/// for R = r^{-eta_l} e^{-r/r_nl} p_n(r/r_nl), differentiated exactly in r,
/// scaled by E^2/(hbar c)^2 max|R| over radii r/r_nl in [lo, hi].
CaseResult radial_ode_residual(const Model& model, const State& state, double lo,
                               double hi, int samples, double tolerance);

}  // namespace kgconf::coulomb

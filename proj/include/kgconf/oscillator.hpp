#pragma once

// Relativistic three-dimensional harmonic oscillator
//   -hbar^2 c^2 lap psi + m0^2 c^4 psi + Omega^2 r^2 psi = E^2 psi.
//
// Length scale: xi_j = x_j sqrt(Omega / (hbar c)), which is the scaling
// the equation itself admits; b = sqrt(2 hbar c / Omega) gives
// (r/b)^2 = xi^2 / 2.

#include <array>
#include <optional>
#include <span>

#include "kgconf/confmap.hpp"
#include "kgconf/field.hpp"
#include "kgconf/linear_operator.hpp"
#include "kgconf/report.hpp"

namespace kgconf::oscillator {

struct Model {
  double omega = 1.0;
  UnitSystem units = natural_units();
  // Divide each axis by its x-space L2 norm (untransformed functions only).
  bool normalized = false;

  /// Omega >= 0; Omega = 0 is only meaningful for the reduction checks.
  static Model make(double omega, UnitSystem units = natural_units(),
                    bool normalized = false);

  double xi_scale() const;      // sqrt(Omega / hbar c)
  double length_scale() const;  // 1 / xi_scale
  double map_scale() const;     // b = sqrt(2 hbar c / Omega), +inf at Omega = 0
};

/// Quantum numbers (l1, l2, l3) >= 0.
struct State {
  std::array<int, 3> l{0, 0, 0};
  int n() const { return l[0] + l[1] + l[2]; }
  void validate() const;
};

/// All (l1, l2, l3) with l1 + l2 + l3 <= nmax, ordered by n.
std::vector<State> states_up_to(int nmax);

/// E_n = sqrt(2 hbar c Omega (3/2 + n) + m0^2 c^4).
double energy(const Model& model, int n);

/// lambda = 2, a = 0, b = sqrt(2 hbar c / Omega), at the given energy.
ConformalMap conformal_map(const Model& model, double energy);

/// k_l of one axis: 1, or sqrt(beta / (2^l l! sqrt(pi))) when normalized.
double axis_norm(const Model& model, int l);

ComplexField eigenfunction_x(const Model& model, const State& state);
/// theta(z) f(s) with theta = prod k_l H_l(zeta_j), f = exp(-i E s / hbar)
/// and s = s(x, t) from conformal_map.
ComplexField eigenfunction_z(const Model& model, const State& state);

/// -hbar^2 c^2 lap + m0^2 c^4 + Omega^2 r^2 - E^2.
LinearOperator kg_operator_x(const Model& model, double energy);
/// -hbar^2 c^2 sum_i d/dz*_i d/dz_i + m0^2 c^4 - (E^2 - 3 hbar c Omega).
/// Contains no zeroth-order position-dependent term.
LinearOperator kg_operator_z(const Model& model, double energy,
                             Composition order = Composition::zstar_after_z);

struct ResidualOptions {
  // Energy used in the operator; defaults to the state's E_n. Probes pass a
  // perturbed value.
  std::optional<double> claimed_energy;
  Execution exec = Execution::parallel;
};

/// Scaled KG residual |(K - E^2) psi| / (E^2 max|psi|) in x-space.
CaseResult kg_residual_x(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts = {});
/// Same in the complex representation, applied to eigenfunction_z.
CaseResult kg_residual_z(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts = {});
/// |i hbar d psi/ds - E psi| / (E max|psi|), d/ds = d/dt.
CaseResult energy_operator_residual(const Model& model, const State& state,
                                    std::span<const SpaceTimePoint> points,
                                    const DiffConfig& cfg, double tolerance,
                                    const ResidualOptions& opts = {});
/// max |eigenfunction_z - eigenfunction_x| / max |eigenfunction_x|.
CaseResult consistency_residual(const Model& model, const State& state,
                                std::span<const SpaceTimePoint> points, double tolerance,
                                Execution exec = Execution::parallel);

enum class Ladder { lower, raise };

/// a_i = sqrt(hbar c / 2 Omega) d/dz_i, a_i^dag = -sqrt(hbar c / 2 Omega) d/dz*_i,
/// with the map energy taken from the field's energy hint.
Estimate ladder_apply(const Model& model, Ladder which, int i, const ComplexField& f,
                      const SpaceTimePoint& p, const DiffConfig& cfg);
/// sum_i a_i^dag a_i psi = -(hbar c / 2 Omega) sum_i d/dz*_i d/dz_i psi.
Estimate number_operator(const Model& model, const ComplexField& f,
                         const SpaceTimePoint& p, const DiffConfig& cfg);

}  // namespace kgconf::oscillator

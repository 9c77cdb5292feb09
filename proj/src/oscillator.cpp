#include "kgconf/oscillator.hpp"
#include "kgconf/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace kgconf::oscillator {

Model Model::make(double omega, UnitSystem units, bool normalized) {
  units.validate();
  if (!(omega >= 0.0) || !std::isfinite(omega))
    throw ConfigError("oscillator requires Omega >= 0");
  return {omega, units, normalized};
}

double Model::xi_scale() const { return std::sqrt(omega / units.hbar_c()); }

double Model::length_scale() const { return 1.0 / xi_scale(); }

double Model::map_scale() const {
  if (omega == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0 * units.hbar_c() / omega);
}

void State::validate() const {
  for (int v : l)
    if (v < 0) throw QuantumNumberError("oscillator quantum numbers must be >= 0");
}

std::vector<State> states_up_to(int nmax) {
  std::vector<State> out;
  for (int n = 0; n <= nmax; ++n)
    for (int l1 = n; l1 >= 0; --l1)
      for (int l2 = n - l1; l2 >= 0; --l2) out.push_back({{l1, l2, n - l1 - l2}});
  return out;
}

double energy(const Model& model, int n) {
  if (n < 0) throw QuantumNumberError("oscillator level n must be >= 0");
  const double rest = model.units.rest_energy();
  return std::sqrt(2.0 * model.units.hbar_c() * model.omega * (1.5 + n) + rest * rest);
}

ConformalMap conformal_map(const Model& model, double e) {
  return ConformalMap::make(0.0, model.map_scale(), 2.0, e, model.units);
}

double axis_norm(const Model& model, int l) {
  if (!model.normalized) return 1.0;
  double factorial = 1.0;
  for (int j = 2; j <= l; ++j) factorial *= j;
  return std::sqrt(model.xi_scale() / (std::ldexp(1.0, l) * factorial * std::sqrt(kPi)));
}

namespace {

std::string state_label(const State& s) {
  return "(" + std::to_string(s.l[0]) + "," + std::to_string(s.l[1]) + "," +
         std::to_string(s.l[2]) + ")";
}

double require_positive_omega(const Model& model) {
  if (!(model.omega > 0.0))
    throw ConfigError("oscillator eigenfunctions require Omega > 0");
  return model.omega;
}

}  // namespace

ComplexField eigenfunction_x(const Model& model, const State& state) {
  state.validate();
  require_positive_omega(model);
  const double beta = model.xi_scale();
  const double e = energy(model, state.n());
  const double hbar = model.units.hbar;
  const double k = axis_norm(model, state.l[0]) * axis_norm(model, state.l[1]) *
                   axis_norm(model, state.l[2]);
  const auto l = state.l;
  return ComplexField::from_generic(
             "oscillator psi" + state_label(state),
             [=](const auto& x, const auto& t) {
               using std::exp;
               auto out = k * exp((-kI * (e / hbar)) * t);
               for (int j = 0; j < 3; ++j) {
                 const auto xi = beta * x[j];
                 out = out * kgconf::hermite(l[j], xi) * exp(-0.5 * xi * xi);
               }
               return out;
             })
      .with_energy_hint(e);
}

ComplexField eigenfunction_z(const Model& model, const State& state) {
  state.validate();
  require_positive_omega(model);
  const double beta = model.xi_scale();
  const double e = energy(model, state.n());
  const double hbar = model.units.hbar;
  const double k = axis_norm(model, state.l[0]) * axis_norm(model, state.l[1]) *
                   axis_norm(model, state.l[2]);
  const auto l = state.l;
  const ConformalMap map = conformal_map(model, e);
  return ComplexField::from_generic(
             "oscillator theta(z)f(s)" + state_label(state),
             [=](const auto& x, const auto& t) {
               using std::exp;
               // No Gaussian: exp(-i E s / hbar) carries it through Im s.
               auto out = k * exp((-kI * (e / hbar)) * map.complex_time(x, t));
               for (int j = 0; j < 3; ++j) out = out * kgconf::hermite(l[j], beta * x[j]);
               return out;
             })
      .with_energy_hint(e);
}

LinearOperator kg_operator_x(const Model& model, double e) {
  const double hc = model.units.hbar_c();
  const double rest = model.units.rest_energy();
  const double omega = model.omega;
  LinearOperator op;
  for (int i = 0; i < 3; ++i)
    op.add_derivative("-hbar^2c^2 d2/dx" + std::to_string(i + 1) + "2",
                      Partial::d2(spatial_axis(i)), -hc * hc);
  op.add_constant("m0^2c^4", rest * rest);
  op.add_multiplier("Omega^2 r^2", [omega](const Vec3& x) {
    return cplx(omega * omega * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  });
  op.add_constant("-E^2", -e * e);
  return op;
}

LinearOperator kg_operator_z(const Model& model, double e, Composition order) {
  const double hc = model.units.hbar_c();
  const double rest = model.units.rest_energy();
  LinearOperator op;
  op.append(complex_laplacian_operator(conformal_map(model, e), order), -hc * hc);
  op.add_constant("m0^2c^4", rest * rest);
  op.add_constant("-(E^2 - 3 hbar c Omega)", -(e * e - 3.0 * hc * model.omega));
  return op;
}

namespace {

CaseResult operator_residual(const std::string& name, const LinearOperator& op,
                             const ComplexField& psi,
                             std::span<const SpaceTimePoint> points,
                             const DiffConfig& cfg, double scale, double tolerance,
                             Execution exec) {
  const GridMaxima m = reduce(
      points,
      [&](const SpaceTimePoint& p) {
        const Estimate r = op.apply(psi, p, cfg);
        return PointSample{std::abs(r.value), std::abs(psi(p)), r.error};
      },
      exec);
  return {name, m.scaled_residual(scale), m.scaled_error(scale), tolerance, false};
}

}  // namespace

CaseResult kg_residual_x(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts) {
  const double e = opts.claimed_energy.value_or(energy(model, state.n()));
  return operator_residual("kg-x " + state_label(state), kg_operator_x(model, e),
                           eigenfunction_x(model, state), points, cfg, e * e, tolerance,
                           opts.exec);
}

CaseResult kg_residual_z(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts) {
  const double e = opts.claimed_energy.value_or(energy(model, state.n()));
  return operator_residual("kg-z " + state_label(state), kg_operator_z(model, e),
                           eigenfunction_z(model, state), points, cfg, e * e, tolerance,
                           opts.exec);
}

CaseResult energy_operator_residual(const Model& model, const State& state,
                                    std::span<const SpaceTimePoint> points,
                                    const DiffConfig& cfg, double tolerance,
                                    const ResidualOptions& opts) {
  const double e = opts.claimed_energy.value_or(energy(model, state.n()));
  LinearOperator op;
  op.add_derivative("i hbar d/ds", Partial::d(Axis::t), kI * model.units.hbar);
  op.add_constant("-E", -e);
  return operator_residual("energy-operator " + state_label(state), op,
                           eigenfunction_z(model, state), points, cfg, e, tolerance,
                           opts.exec);
}

CaseResult consistency_residual(const Model& model, const State& state,
                                std::span<const SpaceTimePoint> points, double tolerance,
                                Execution exec) {
  const ComplexField px = eigenfunction_x(model, state);
  const ComplexField pz = eigenfunction_z(model, state);
  const GridMaxima m = reduce(
      points,
      [&](const SpaceTimePoint& p) {
        const cplx vx = px(p);
        return PointSample{std::abs(pz(p) - vx), std::abs(vx), 0.0};
      },
      exec);
  return {"consistency " + state_label(state), m.scaled_residual(1.0), 0.0, tolerance,
          false};
}

namespace {

double field_energy(const ComplexField& f) {
  if (!f.energy_hint())
    throw ConfigError("ladder operators need the field's energy hint ('" + f.label() +
                      "')");
  return *f.energy_hint();
}

}  // namespace

Estimate ladder_apply(const Model& model, Ladder which, int i, const ComplexField& f,
                      const SpaceTimePoint& p, const DiffConfig& cfg) {
  if (i < 0 || i > 2) throw ConfigError("ladder axis must be 0, 1 or 2");
  const double scale = std::sqrt(model.units.hbar_c() / (2.0 * require_positive_omega(model)));
  const ConformalMap map = conformal_map(model, field_energy(f));
  if (which == Ladder::lower) {
    const Estimate d = d_z(map, f, p, i, cfg);
    return {scale * d.value, scale * d.error};
  }
  const Estimate d = d_zstar(map, f, p, i, cfg);
  return {-scale * d.value, scale * d.error};
}

Estimate number_operator(const Model& model, const ComplexField& f,
                         const SpaceTimePoint& p, const DiffConfig& cfg) {
  const double scale = model.units.hbar_c() / (2.0 * require_positive_omega(model));
  const Estimate d = complex_laplacian(conformal_map(model, field_energy(f)), f, p, cfg);
  return {-scale * d.value, scale * d.error};
}

}  // namespace kgconf::oscillator

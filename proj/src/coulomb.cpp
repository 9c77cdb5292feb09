#include "kgconf/coulomb.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace kgconf::coulomb {

Model Model::make(double alpha, UnitSystem units) {
  units.validate();
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw ConfigError("Coulomb coupling alpha must be >= 0");
  return {alpha, units};
}

void State::validate() const {
  if (n < 0 || l < 0) throw QuantumNumberError("Coulomb state requires n >= 0, l >= 0");
  if (k > l || -k > l) throw QuantumNumberError("Coulomb state requires |k| <= l");
}

std::string State::label() const {
  return "(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(k) +
         ")" + (branch == Branch::hydrino ? " hydrino" : "");
}

namespace {

struct Exponent {
  double eta;
  double one_minus_eta;
};

// eta_s + eta_h = 1, and eta_s = (alpha^2 - l(l+1)) / (1/2 + root) avoids
// the cancellation in 1/2 - root when l = 0.
Exponent exponent(const Model& model, int l, Branch branch) {
  if (l < 0) throw QuantumNumberError("l must be >= 0");
  const double radicand = (l + 0.5) * (l + 0.5) - model.alpha * model.alpha;
  if (radicand < 0.0)
    throw BranchError("eta_l is complex: alpha >= l + 1/2 for l = " + std::to_string(l));
  const double root = std::sqrt(radicand);
  const double small = (model.alpha * model.alpha - l * (l + 1.0)) / (0.5 + root);
  const double large = 0.5 + root;
  return branch == Branch::sommerfeld ? Exponent{small, large} : Exponent{large, small};
}

}  // namespace

double eta(const Model& model, int l, Branch branch) {
  return exponent(model, l, branch).eta;
}

double one_minus_eta(const Model& model, int l, Branch branch) {
  return exponent(model, l, branch).one_minus_eta;
}

double energy(const Model& model, const State& state) {
  state.validate();
  const double nu = state.n + one_minus_eta(model, state.l, state.branch);
  if (!(nu > 0.0))
    throw BranchError("state " + state.label() +
                      " has n + 1 - eta_l <= 0: r_nl would not be positive");
  return model.units.rest_energy() /
         std::sqrt(1.0 + model.alpha * model.alpha / (nu * nu));
}

namespace {

void require_coupling(const Model& model) {
  if (!(model.alpha > 0.0))
    throw ConfigError("alpha = 0: the map scale b = hbar c (1 - eta_0)/(alpha E) diverges");
}

}  // namespace

double radial_scale(const Model& model, const State& state) {
  require_coupling(model);
  const double nu = state.n + one_minus_eta(model, state.l, state.branch);
  return model.units.hbar_c() * nu / (model.alpha * energy(model, state));
}

MapCoefficients map_coefficients(const Model& model, const State& state) {
  require_coupling(model);
  return {eta(model, 0, state.branch), model.units.hbar_c() *
                                           one_minus_eta(model, 0, state.branch) /
                                           (model.alpha * energy(model, state))};
}

ConformalMap conformal_map(const Model& model, const State& state) {
  const MapCoefficients c = map_coefficients(model, state);
  return ConformalMap::make(c.a, c.b, 1.0, energy(model, state), model.units);
}

double transformed_rate(const Model& model, const State& state) {
  // n - eta_l + eta_0 = n + (1 - eta_l) - (1 - eta_0)
  const double c0 = one_minus_eta(model, 0, state.branch);
  return (state.n + one_minus_eta(model, state.l, state.branch) - c0) / c0;
}

double transformed_eigenvalue(const Model& model, const State& state) {
  const double e = energy(model, state);
  const double q = model.alpha / one_minus_eta(model, 0, state.branch);
  return e * e * (1.0 + q * q);
}

namespace {

// Everything a radial/angular evaluator needs, fixed per state.
struct Shape {
  State state;
  double eta_l = 0.0;
  double eta_0 = 0.0;
  double energy = 0.0;
  double r_nl = 0.0;
  double rate = 0.0;
  double hbar = 1.0;
  RadialPolynomial poly;
};

Shape shape_of(const Model& model, const State& state) {
  state.validate();
  require_coupling(model);
  Shape s;
  s.state = state;
  s.eta_l = eta(model, state.l, state.branch);
  s.eta_0 = eta(model, 0, state.branch);
  s.energy = energy(model, state);
  s.r_nl = radial_scale(model, state);
  s.rate = transformed_rate(model, state);
  s.hbar = model.units.hbar;
  s.poly = radial_polynomial(state.n, state.l, model.alpha, state.branch);
  return s;
}

template <class S>
S angular(const Shape& sh, const Coords<S>& x, const S& r) {
  const S inv_r = 1.0 / r;
  return spherical_harmonic_uw(sh.state.l, sh.state.k, x[2] * inv_r,
                               (x[0] + kI * x[1]) * inv_r, (x[0] - kI * x[1]) * inv_r);
}

}  // namespace

ComplexField eigenfunction_x(const Model& model, const State& state) {
  const Shape sh = shape_of(model, state);
  return ComplexField::from_generic(
             "coulomb psi" + state.label(),
             [sh](const auto& x, const auto& t) {
               using std::exp;
               using std::log;
               const auto r = radial_norm_of(x);
               const auto u = r / sh.r_nl;
               const auto radial = exp(-sh.eta_l * log(r) - u) * sh.poly(u);
               return radial * angular(sh, x, r) * exp((-kI * (sh.energy / sh.hbar)) * t);
             })
      .with_energy_hint(sh.energy)
      .with_singular_origin();
}

ComplexField eigenfunction_z(const Model& model, const State& state) {
  const Shape sh = shape_of(model, state);
  const ConformalMap map = conformal_map(model, state);
  return ComplexField::from_generic(
             "coulomb R(r_z)Y f(s)" + state.label(),
             [sh, map](const auto& x, const auto& t) {
               using std::exp;
               using std::log;
               const auto r = radial_norm_of(x);
               const auto u = r / sh.r_nl;
               const auto radial = exp((sh.eta_0 - sh.eta_l) * log(r) + sh.rate * u) * sh.poly(u);
               return radial * angular(sh, x, r) *
                      exp((-kI * (sh.energy / sh.hbar)) * map.complex_time(x, t));
             })
      .with_energy_hint(sh.energy)
      .with_singular_origin();
}

LinearOperator kg_operator_x(const Model& model, double e) {
  const double hc = model.units.hbar_c();
  const double rest = model.units.rest_energy();
  const double alpha = model.alpha;
  LinearOperator op;
  for (int i = 0; i < 3; ++i)
    op.add_derivative("-hbar^2c^2 d2/dx" + std::to_string(i + 1) + "2",
                      Partial::d2(spatial_axis(i)), -hc * hc);
  op.add_constant("m0^2c^4", rest * rest);
  op.add_multiplier("-(E + hbar c alpha/r)^2", [=](const Vec3& x) {
    const double v = e + hc * alpha / radial_norm(x);
    return cplx(-v * v);
  });
  return op;
}

LinearOperator kg_operator_z(const Model& model, const State& state, double e) {
  const double hc = model.units.hbar_c();
  const double rest = model.units.rest_energy();
  ConformalMap map = conformal_map(model, state);
  const double c0 = one_minus_eta(model, 0, state.branch);
  map.energy = e;
  map.b = hc * c0 / (model.alpha * e);
  const double q = model.alpha / c0;
  LinearOperator op;
  op.append(complex_laplacian_operator(map), -hc * hc);
  op.add_constant("m0^2c^4", rest * rest);
  op.add_constant("-E^2 [1 + alpha^2/(1-eta_0)^2]", -e * e * (1.0 + q * q));
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

// The largest constant in the operator. Equal to E^2 up to O(alpha^2) on the
// sommerfeld branch; m0^2 c^4 for hydrino states, where E ~ alpha m0 c^2 and
// m0^2 c^4 psi cancels against the derivative terms.
double energy_scale(const Model& model, double e) {
  const double rest = model.units.rest_energy();
  return std::max(e * e, rest * rest);
}

}  // namespace

CaseResult kg_residual_x(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts) {
  const double e = opts.claimed_energy.value_or(energy(model, state));
  return operator_residual("kg-x " + state.label(), kg_operator_x(model, e),
                           eigenfunction_x(model, state), points, cfg, energy_scale(model, e),
                           tolerance, opts.exec);
}

CaseResult kg_residual_z(const Model& model, const State& state,
                         std::span<const SpaceTimePoint> points, const DiffConfig& cfg,
                         double tolerance, const ResidualOptions& opts) {
  const double e = opts.claimed_energy.value_or(energy(model, state));
  return operator_residual("kg-z " + state.label(), kg_operator_z(model, state, e),
                           eigenfunction_z(model, state), points, cfg, energy_scale(model, e),
                           tolerance, opts.exec);
}

CaseResult complex_laplacian_residual(const Model& model, const State& state,
                                      std::span<const SpaceTimePoint> points,
                                      const DiffConfig& cfg, double tolerance,
                                      Execution exec) {
  const double hc = model.units.hbar_c();
  const double e = energy(model, state);
  LinearOperator op;
  op.append(complex_laplacian_operator(conformal_map(model, state)), hc * hc);
  return operator_residual("sum d2/dz*dz " + state.label(), op,
                           eigenfunction_z(model, state), points, cfg, energy_scale(model, e),
                           tolerance, exec);
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
  return {"consistency " + state.label(), m.scaled_residual(1.0), 0.0, tolerance, false};
}

CaseResult radial_ode_residual(const Model& model, const State& state, double lo,
                               double hi, int samples, double tolerance) {
  if (!(lo > 0.0) || !(hi > lo) || samples < 2)
    throw ConfigError("radial window must satisfy 0 < lo < hi with >= 2 samples");
  const Shape sh = shape_of(model, state);
  const double hc = model.units.hbar_c();
  const double rest = model.units.rest_energy();
  const double alpha = model.alpha;
  const double centrifugal = sh.state.l * (sh.state.l + 1.0) - alpha * alpha;
  const double k2 = (sh.energy * sh.energy - rest * rest) / (hc * hc);
  const double coulomb = 2.0 * sh.energy * alpha / hc;

  using D = HyperDual<double>;
  double worst = 0.0, biggest = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double r = sh.r_nl * lo * std::pow(hi / lo, double(j) / (samples - 1));
    const D rr(r, 1.0, 1.0, 0.0);
    const D u = rr / sh.r_nl;
    const D radial = exp(-sh.eta_l * log(rr) - u) * sh.poly(u);
    const double res = radial.d12 + 2.0 * radial.d1 / r +
                       (-centrifugal / (r * r) + coulomb / r + k2) * radial.v;
    worst = std::max(worst, std::abs(res));
    biggest = std::max(biggest, std::abs(radial.v));
  }
  const double scale = energy_scale(model, sh.energy) / (hc * hc) * biggest;
  return {"radial-ode " + state.label(), worst / scale, 0.0, tolerance, false};
}

}  // namespace kgconf::coulomb

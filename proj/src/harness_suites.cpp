#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "kgconf/harness.hpp"

namespace kgconf {

namespace {

constexpr double kConsistencyTolerance = 1e-12;
constexpr double kAlgebraTolerance = 1e-14;
constexpr double kDecayTolerance = 1e-6;

struct Context {
  const SuiteParams& params;
  const DiffConfig& cfg;
  double tol;

  Grid grid(double length) const {
    Grid g = default_grid(length);
    g.shells = params.shells;
    g.directions = fibonacci_directions(params.directions);
    g.times = params.times;
    return g;
  }
  Execution exec() const { return params.exec; }

  // Stencil steps follow the length and time scales of the fields under
  // test, so the roundoff floor stays put for states at r ~ 1/alpha or with
  // E << m0 c^2. Explicit per-axis steps are left alone.
  DiffConfig scaled(double length, double time = 1.0) const {
    DiffConfig out = cfg;
    if (out.mode == DiffMode::stencil && !out.axis_steps) {
      const double h = out.base_step * length;
      out.axis_steps = std::array<double, 4>{h, h, h, out.base_step * time};
    }
    return out;
  }

  // hbar / E, capped below at the natural time unit.
  double time_scale(double energy) const {
    return std::max(1.0, params.units.hbar / energy);
  }
};

CaseResult as_probe(CaseResult c, const std::string& name) {
  c.name = "probe/" + name;
  c.probe = true;
  return c;
}

CaseResult exact_case(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, 0.0, tolerance, false};
}

// Relative deviation of a from b.
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// ---------------------------------------------------------------- oscillator

ResidualReport oscillator_x(const Context& ctx) {
  const auto model = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const auto points = ctx.grid(model.length_scale()).points();
  ResidualReport report;
  for (const auto& state : oscillator::states_up_to(ctx.params.nmax))
    report.add(oscillator::kg_residual_x(model, state, points, ctx.cfg, ctx.tol,
                                         {std::nullopt, ctx.exec()}));
  const double e0 = oscillator::energy(model, 0);
  report.add(as_probe(oscillator::kg_residual_x(model, {}, points, ctx.cfg, ctx.tol,
                                                {1.1 * e0, ctx.exec()}),
                      "kg-x (0,0,0) at 1.1 E_0"));
  return report;
}

ResidualReport oscillator_z(const Context& ctx) {
  const auto model = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const auto points = ctx.grid(model.length_scale()).points();
  ResidualReport report;
  const double e0 = oscillator::energy(model, 0);
  for (const auto& state : oscillator::states_up_to(ctx.params.nmax)) {
    report.add(oscillator::kg_residual_z(model, state, points, ctx.cfg, ctx.tol,
                                         {std::nullopt, ctx.exec()}));
    report.add(oscillator::energy_operator_residual(model, state, points, ctx.cfg, ctx.tol,
                                                    {std::nullopt, ctx.exec()}));
    if (state.n() <= 4)
      report.add(oscillator::consistency_residual(model, state, points,
                                                  kConsistencyTolerance, ctx.exec()));
  }
  // Structural: the complex-representation operator carries no potential.
  const bool z_has = oscillator::kg_operator_z(model, e0).has_potential_term();
  const bool x_has = oscillator::kg_operator_x(model, e0).has_potential_term();
  report.add(exact_case("structure/no potential term in z-form", z_has ? 1.0 : 0.0, 0.0));
  report.add(as_probe(exact_case("", x_has ? 1.0 : 0.0, 0.0),
                      "structure detector flags the x-form potential"));
  report.add(as_probe(oscillator::kg_residual_z(model, {}, points, ctx.cfg, ctx.tol,
                                                {1.1 * e0, ctx.exec()}),
                      "kg-z (0,0,0) at 1.1 E_0"));
  return report;
}

ResidualReport ladder(const Context& ctx) {
  const auto model = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const Grid grid = ctx.grid(model.length_scale());
  const auto points = grid.points();
  const DiffConfig& cfg = ctx.cfg;
  ResidualReport report;

  const ComplexField ground = oscillator::eigenfunction_x(model, {});
  for (int i = 0; i < 3; ++i) {
    const GridMaxima m = reduce(
        std::span<const SpaceTimePoint>(points),
        [&](const SpaceTimePoint& p) {
          const Estimate a = oscillator::ladder_apply(model, oscillator::Ladder::lower, i,
                                                      ground, p, cfg);
          return PointSample{std::abs(a.value), std::abs(ground(p)), a.error};
        },
        ctx.exec());
    report.add({"lower_" + std::to_string(i + 1) + " psi(0,0,0)", m.scaled_residual(1.0),
                m.scaled_error(1.0), 1e-10, false});
  }

  auto number_case = [&](const oscillator::State& state, int claimed) {
    const ComplexField psi = oscillator::eigenfunction_x(model, state);
    const GridMaxima m = reduce(
        std::span<const SpaceTimePoint>(points),
        [&](const SpaceTimePoint& p) {
          const Estimate nv = oscillator::number_operator(model, psi, p, cfg);
          const cplx v = psi(p);
          return PointSample{std::abs(nv.value - double(claimed) * v), std::abs(v), nv.error};
        },
        ctx.exec());
    const double scale = std::max(1, claimed);
    return CaseResult{"number " + std::to_string(state.l[0]) + std::to_string(state.l[1]) +
                          std::to_string(state.l[2]),
                      m.scaled_residual(scale), m.scaled_error(scale), ctx.tol, false};
  };
  for (const auto& state : oscillator::states_up_to(std::min(ctx.params.nmax, 4)))
    report.add(number_case(state, state.n()));

  // a_1 psi(1,0,0) is proportional to psi(0,0,0): the pointwise ratio at t = 0
  // must be constant where psi(0,0,0) is appreciable.
  {
    const ComplexField excited = oscillator::eigenfunction_x(model, {{1, 0, 0}});
    std::vector<SpaceTimePoint> slice;
    double peak = 0.0;
    for (const auto& p : points) peak = std::max(peak, std::abs(ground(p)));
    for (const auto& p : points)
      if (p.t == ctx.params.times.front() && std::abs(ground(p)) >= 1e-6 * peak)
        slice.push_back(p);
    std::vector<cplx> ratios(slice.size());
    for (std::size_t j = 0; j < slice.size(); ++j) {
      SpaceTimePoint p = slice[j];
      const cplx a = oscillator::ladder_apply(model, oscillator::Ladder::lower, 0, excited,
                                              p, cfg)
                         .value;
      // Compare at equal phase: remove the e^{-i(E_1 - E_0)t} difference.
      const double de = oscillator::energy(model, 1) - oscillator::energy(model, 0);
      ratios[j] = a / ground(p) * std::exp(kI * de * p.t / model.units.hbar);
    }
    cplx mean{};
    for (const cplx& r : ratios) mean += r;
    mean /= double(ratios.size());
    double spread = 0.0;
    for (const cplx& r : ratios) spread = std::max(spread, std::abs(r - mean));
    report.add(exact_case("lower_1 psi(1,0,0) / psi(0,0,0) spread", spread / std::abs(mean),
                          std::max(ctx.tol, 1e-8)));
  }

  report.add(as_probe(number_case({{1, 0, 0}}, 2), "number (1,0,0) claimed as 2"));
  return report;
}

// ------------------------------------------------------------------- coulomb

ResidualReport coulomb_x(const Context& ctx) {
  const auto model = coulomb::Model::make(ctx.params.alpha, ctx.params.units);
  ResidualReport report;
  for (const auto& state : ctx.params.coulomb_states) {
    const double r_nl = coulomb::radial_scale(model, state);
    const auto points = ctx.grid(r_nl).points();
    report.add(coulomb::kg_residual_x(model, state, points,
                                      ctx.scaled(r_nl, ctx.time_scale(coulomb::energy(model, state))), ctx.tol,
                                      {std::nullopt, ctx.exec()}));
    if (state.k == 0 || state.k == -state.l)
      report.add(coulomb::radial_ode_residual(model, state, 0.1, 20.0, 400, ctx.tol));
  }
  const auto& first = ctx.params.coulomb_states.front();
  const double r_first = coulomb::radial_scale(model, first);
  const auto points = ctx.grid(r_first).points();
  const double e = coulomb::energy(model, first);
  report.add(as_probe(coulomb::kg_residual_x(model, first, points, ctx.scaled(r_first), ctx.tol,
                                             {1.1 * e, ctx.exec()}),
                      "kg-x " + first.label() + " at 1.1 E"));
  return report;
}

ResidualReport coulomb_z(const Context& ctx) {
  const auto model = coulomb::Model::make(ctx.params.alpha, ctx.params.units);
  const double hc = model.units.hbar_c();
  ResidualReport report;
  for (const auto& state : ctx.params.coulomb_states) {
    const double r_nl = coulomb::radial_scale(model, state);
    const auto points = ctx.grid(r_nl).points();
    const auto label = state.label();
    const DiffConfig cfg = ctx.scaled(r_nl, ctx.time_scale(coulomb::energy(model, state)));
    report.add(coulomb::kg_residual_z(model, state, points, cfg, ctx.tol,
                                      {std::nullopt, ctx.exec()}));
    report.add(coulomb::consistency_residual(model, state, points, kConsistencyTolerance,
                                             ctx.exec()));
    if (state.n == 0 && state.l == 0)
      report.add(coulomb::complex_laplacian_residual(model, state, points, cfg, ctx.tol,
                                                     ctx.exec()));

    const auto c = coulomb::map_coefficients(model, state);
    const double e = coulomb::energy(model, state);
    const double alpha2 = model.alpha * model.alpha;
    report.add(exact_case("a(1-a) = alpha^2 " + label,
                          rel(c.a * coulomb::one_minus_eta(model, 0, state.branch), alpha2),
                          kAlgebraTolerance));
    report.add(exact_case("E^2 + (hbar c/b)^2 = eigenvalue " + label,
                          rel(e * e + hc * hc / (c.b * c.b),
                              coulomb::transformed_eigenvalue(model, state)),
                          kAlgebraTolerance));
    report.add(exact_case("r_nl/b - rate = 1 " + label,
                          std::abs(r_nl / c.b - coulomb::transformed_rate(model, state) - 1.0),
                          kAlgebraTolerance));

    // f(s) = exp(-i E s/hbar) over the (t, tau) rectangle the grid spans.
    const ConformalMap map = coulomb::conformal_map(model, state);
    const Grid g = ctx.grid(r_nl);
    HolomorphyRegion region;
    region.t_min = 0.0;
    region.t_max = 2.0 * kPi * model.units.hbar / e;
    region.tau_min = map.tau(g.r_max);
    region.tau_max = map.tau(g.r_min);
    const double hbar = model.units.hbar;
    const ComplexField f = function_of_s("exp(-iEs/hbar)", [e, hbar](const auto& s) {
      using std::exp;
      return exp((-kI * (e / hbar)) * s);
    });
    report.add(holomorphy_residual("holomorphy f(s) " + label, f, region, ctx.cfg, ctx.tol,
                                   ctx.exec()));
  }
  const auto& first = ctx.params.coulomb_states.front();
  const double r_first = coulomb::radial_scale(model, first);
  const auto points = ctx.grid(r_first).points();
  const double e = coulomb::energy(model, first);
  report.add(as_probe(coulomb::kg_residual_z(model, first, points, ctx.scaled(r_first), ctx.tol,
                                             {1.1 * e, ctx.exec()}),
                      "kg-z " + first.label() + " at 1.1 E"));
  return report;
}

// ---------------------------------------------------------------- confmap

ResidualReport map_independence(const Context& ctx) {
  ResidualReport report;
  auto add_prefixed = [&](const std::string& prefix, const ResidualReport& r) {
    for (CaseResult c : r.cases) {
      c.name = c.probe ? "probe/" + prefix + "/" + c.name.substr(6) : prefix + "/" + c.name;
      report.add(c);
    }
  };
  auto window = [&](double lo, double hi) {
    Grid g = ctx.grid(1.0);
    g.r_min = lo;
    g.r_max = hi;
    return g.points();
  };

  const auto osc = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const double L = osc.length_scale();
  add_prefixed("oscillator",
               independence_check(oscillator::conformal_map(osc, oscillator::energy(osc, 0)),
                                  window(0.2 * L, 3.0 * L), ctx.cfg, ctx.tol, ctx.exec()));

  const auto cm = coulomb::Model::make(ctx.params.alpha, ctx.params.units);
  const auto& state = ctx.params.coulomb_states.front();
  const double r_nl = coulomb::radial_scale(cm, state);
  add_prefixed("coulomb", independence_check(coulomb::conformal_map(cm, state),
                                             window(0.2 * r_nl, 20.0 * r_nl), ctx.scaled(r_nl),
                                             ctx.tol, ctx.exec()));

  const auto free = oscillator::Model::make(0.0, ctx.params.units);
  add_prefixed("identity",
               independence_check(oscillator::conformal_map(free, oscillator::energy(free, 0)),
                                  window(0.2, 3.0), ctx.cfg, ctx.tol, ctx.exec()));
  return report;
}

ResidualReport holomorphy(const Context& ctx) {
  ResidualReport report;
  const HolomorphyRegion region;
  const auto osc = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const double e = oscillator::energy(osc, 0);
  const double hbar = ctx.params.units.hbar;
  report.add(holomorphy_residual(
      "exp(-iEs/hbar)",
      function_of_s("exp(-iEs/hbar)",
                    [e, hbar](const auto& s) {
                      using std::exp;
                      return exp((-kI * (e / hbar)) * s);
                    }),
      region, ctx.cfg, ctx.tol, ctx.exec()));
  report.add(holomorphy_residual(
      "s^2", function_of_s("s^2", [](const auto& s) { return s * s; }), region, ctx.cfg,
      ctx.tol, ctx.exec()));
  const ComplexField t_squared = ComplexField::from_generic(
      "t^2", [](const auto&, const auto& t) { return t * t; });
  report.add(as_probe(holomorphy_residual("", t_squared, region, ctx.cfg, ctx.tol, ctx.exec()),
                      "t^2 (not holomorphic)"));
  return report;
}

// --------------------------------------------------------- operator identities

ResidualReport operator_identities(const Context& ctx) {
  const int count = ctx.params.random_fields;
  ResidualReport report;
  std::mt19937_64 seeds(ctx.params.seed);

  // Oscillator: -sum d/dz* d/dz + 3 Omega/hbar c = -lap + Omega^2 r^2/(hbar c)^2.
  const auto osc = oscillator::Model::make(ctx.params.omega, ctx.params.units);
  const double hc = osc.units.hbar_c();
  const double k = osc.omega / hc;
  const Grid osc_grid = [&] {
    Grid g = ctx.grid(osc.length_scale());
    g.shells = 40;
    g.times = {0.3};
    return g;
  }();
  const auto osc_points = osc_grid.points();
  const auto osc_boundary = osc_grid.boundary_points();

  LinearOperator rhs_osc;
  for (int i = 0; i < 3; ++i) rhs_osc.add_derivative("-d2", Partial::d2(spatial_axis(i)), -1.0);
  rhs_osc.add_multiplier("k^2 r^2", [k](const Vec3& x) {
    return cplx(k * k * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
  });

  GridMaxima decay;
  auto boundary_ratio = [&](const ComplexField& f, std::span<const SpaceTimePoint> pts,
                            std::span<const SpaceTimePoint> edge) {
    double inner = 0.0, outer = 0.0;
    for (const auto& p : pts) inner = std::max(inner, std::abs(f(p)));
    for (const auto& p : edge) outer = std::max(outer, std::abs(f(p)));
    decay.absorb({outer / inner, 0.0, 0.0});
  };

  auto oscillator_identity = [&](const ComplexField& f, Composition order) {
    const ConformalMap map = oscillator::conformal_map(osc, *f.energy_hint());
    LinearOperator lhs;
    lhs.append(complex_laplacian_operator(map, order), -1.0);
    lhs.add_constant("3 Omega/hbar c", 3.0 * k);
    return reduce(
        std::span<const SpaceTimePoint>(osc_points),
        [&](const SpaceTimePoint& p) {
          const Estimate a = lhs.apply(f, p, ctx.cfg);
          const Estimate b = rhs_osc.apply(f, p, ctx.cfg);
          return PointSample{std::abs(a.value - b.value), std::abs(f(p)), a.error + b.error};
        },
        ctx.exec());
  };

  GridMaxima q_all;
  double q_scaled = 0.0, q_err = 0.0;
  ComplexField first_osc_field;
  for (int j = 0; j < count; ++j) {
    TestFieldSpec spec;
    spec.seed = seeds();
    spec.energy = oscillator::energy(osc, j % 7);
    spec.hbar = osc.units.hbar;
    spec.length = osc.length_scale();
    const ComplexField f = generate_test_field(spec);
    if (j == 0) first_osc_field = f;
    boundary_ratio(f, osc_points, osc_boundary);
    const GridMaxima m = oscillator_identity(f, Composition::zstar_after_z);
    q_scaled = std::max(q_scaled, m.scaled_residual(3.0 * k));
    q_err = std::max(q_err, m.scaled_error(3.0 * k));
    q_all.merge(m);
  }
  report.add({"oscillator laplacian identity over " + std::to_string(count) + " fields", q_scaled, q_err, ctx.tol,
              false});

  // Coulomb: sum d/dz* d/dz = lap + a(1-a)/r^2 + 2(1-a)/(b r) - 1/b^2.
  const auto cm = coulomb::Model::make(ctx.params.alpha, ctx.params.units);
  double d_scaled = 0.0, d_err = 0.0;
  const ComplexField* probe_field = nullptr;
  std::vector<ComplexField> keep;
  keep.reserve(1);
  ConformalMap probe_map;
  std::vector<SpaceTimePoint> probe_points;

  auto coulomb_identity = [&](const ComplexField& f, const ConformalMap& map,
                 std::span<const SpaceTimePoint> pts, bool drop_constant) {
    const double a = map.a, b = map.b;
    const DiffConfig cfg = ctx.scaled(b);
    LinearOperator rhs;
    for (int i = 0; i < 3; ++i) rhs.add_derivative("d2", Partial::d2(spatial_axis(i)), 1.0);
    rhs.add_multiplier("a(1-a)/r^2 + 2(1-a)/(br)", [a, b](const Vec3& x) {
      const double r = radial_norm(x);
      return cplx(a * (1.0 - a) / (r * r) + 2.0 * (1.0 - a) / (b * r));
    });
    if (!drop_constant) rhs.add_constant("-1/b^2", -1.0 / (b * b));
    const LinearOperator lhs = complex_laplacian_operator(map);
    return reduce(
        pts,
        [&](const SpaceTimePoint& p) {
          const Estimate l = lhs.apply(f, p, cfg);
          const Estimate r = rhs.apply(f, p, cfg);
          return PointSample{std::abs(l.value - r.value), std::abs(f(p)), l.error + r.error};
        },
        ctx.exec());
  };

  const auto& states = ctx.params.coulomb_states;
  for (int j = 0; j < count; ++j) {
    const auto& state = states[j % states.size()];
    const ConformalMap map = coulomb::conformal_map(cm, state);
    Grid g = ctx.grid(map.b);
    g.shells = 40;
    g.times = {0.3};
    const auto pts = g.points();
    TestFieldSpec spec;
    spec.seed = seeds();
    spec.energy = map.energy;
    spec.hbar = cm.units.hbar;
    spec.length = map.b;
    ComplexField f = generate_test_field(spec);
    boundary_ratio(f, pts, g.boundary_points());
    const GridMaxima m = coulomb_identity(f, map, pts, false);
    const double scale = 1.0 / (map.b * map.b);
    d_scaled = std::max(d_scaled, m.scaled_residual(scale));
    d_err = std::max(d_err, m.scaled_error(scale));
    if (j == 0) {
      keep.push_back(std::move(f));
      probe_field = &keep.front();
      probe_map = map;
      probe_points = pts;
    }
  }
  report.add({"coulomb laplacian identity over " + std::to_string(count) + " fields", d_scaled, d_err, ctx.tol,
              false});
  report.add(exact_case("test fields decay at the grid boundary", decay.residual,
                        kDecayTolerance));

  if (count > 0) {
    const GridMaxima rev = oscillator_identity(first_osc_field, Composition::z_after_zstar);
    report.add(as_probe({"", rev.scaled_residual(3.0 * k), rev.scaled_error(3.0 * k), ctx.tol,
                         false},
                        "oscillator identity with reversed composition"));
    const GridMaxima drop = coulomb_identity(*probe_field, probe_map, probe_points, true);
    const double scale = 1.0 / (probe_map.b * probe_map.b);
    report.add(as_probe({"", drop.scaled_residual(scale), drop.scaled_error(scale), ctx.tol,
                         false},
                        "coulomb identity without the -1/b^2 term"));
  }
  return report;
}

// ---------------------------------------------------------------- reductions

ResidualReport reductions(const Context& ctx) {
  ResidualReport report;
  const UnitSystem& u = ctx.params.units;
  const auto free = oscillator::Model::make(0.0, u);
  const auto points = ctx.grid(1.0).points();

  {
    const ConformalMap map = oscillator::conformal_map(free, oscillator::energy(free, 0));
    double dev = 0.0;
    for (const auto& p : points) {
      const ComplexPoint q = forward(map, p);
      dev = std::max({dev, std::abs(q.s - cplx(p.t)), radial_norm({q.z[0] - p.x[0],
                                                                    q.z[1] - p.x[1],
                                                                    q.z[2] - p.x[2]})});
    }
    report.add(exact_case("Omega=0 map is the identity", dev, 0.0));
  }
  {
    // Pointwise approach to the identity: |s - t| -> Omega hbar r^2 / (2 hbar c m0 c^2).
    double r_max = 0.0;
    for (const auto& p : points) r_max = std::max(r_max, radial_norm(p.x));
    const double slope = u.hbar * r_max * r_max / (2.0 * u.hbar_c() * u.rest_energy());
    double worst_slope = 0.0;
    double last = 0.0;
    for (double omega : {1e-6, 1e-8, 1e-10, 1e-12, 1e-14}) {
      const auto model = oscillator::Model::make(omega, u);
      const ConformalMap map = oscillator::conformal_map(model, oscillator::energy(model, 0));
      double dev = 0.0;
      for (const auto& p : points) dev = std::max(dev, std::abs(forward(map, p).s - cplx(p.t)));
      worst_slope = std::max(worst_slope, rel(dev / omega, slope));
      last = dev;
    }
    report.add(exact_case("Omega->0: |s - t| / Omega against its limit", worst_slope, 1e-5));
    report.add(exact_case("Omega=1e-14: max |s - t|", last, ctx.tol));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= ctx.params.nmax; ++n)
      worst = std::max(worst, rel(oscillator::energy(free, n), u.rest_energy()));
    report.add(exact_case("Omega=0: E_n = m0 c^2", worst, kAlgebraTolerance));
  }

  std::mt19937_64 rng(ctx.params.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto plane_wave = [&](const Vec3& k, double e) {
    const double hbar = u.hbar;
    return ComplexField::from_generic("plane wave", [k, e, hbar](const auto& x, const auto& t) {
             using std::exp;
             return exp(kI * (k[0] * x[0] + k[1] * x[1] + k[2] * x[2]) -
                        (kI * (e / hbar)) * t);
           })
        .with_energy_hint(e);
  };
  auto free_residual = [&](const Vec3& k, double e_field, double e_claimed) {
    const ComplexField f = plane_wave(k, e_field);
    const LinearOperator op = oscillator::kg_operator_z(free, e_claimed);
    const GridMaxima m = reduce(
        std::span<const SpaceTimePoint>(points),
        [&](const SpaceTimePoint& p) {
          const Estimate r = op.apply(f, p, ctx.cfg);
          return PointSample{std::abs(r.value), std::abs(f(p)), r.error};
        },
        ctx.exec());
    return std::pair{m.scaled_residual(e_claimed * e_claimed),
                     m.scaled_error(e_claimed * e_claimed)};
  };
  double worst = 0.0, worst_err = 0.0;
  Vec3 k0{};
  double e0 = 0.0;
  for (int j = 0; j < 8; ++j) {
    const Vec3 k{unit(rng), unit(rng), unit(rng)};
    const double hck = u.hbar_c() * radial_norm(k);
    const double e = std::sqrt(hck * hck + u.rest_energy() * u.rest_energy());
    if (j == 0) {
      k0 = k;
      e0 = e;
    }
    const auto [r, err] = free_residual(k, e, e);
    worst = std::max(worst, r);
    worst_err = std::max(worst_err, err);
  }
  report.add({"free plane waves, z-form at Omega=0", worst, worst_err, ctx.tol, false});
  {
    const auto [r, err] = free_residual(k0, e0, 1.1 * e0);
    report.add(as_probe({"", r, err, ctx.tol, false}, "plane wave with wrong dispersion"));
  }
  return report;
}

using SuiteFn = ResidualReport (*)(const Context&);

const std::map<std::string, SuiteFn, std::less<>>& registry() {
  static const std::map<std::string, SuiteFn, std::less<>> suites{
      {"oscillator-x", oscillator_x},       {"oscillator-z", oscillator_z},
      {"ladder", ladder},                   {"coulomb-x", coulomb_x},
      {"coulomb-z", coulomb_z},             {"map-independence", map_independence},
      {"holomorphy", holomorphy},           {"operator-identities", operator_identities},
      {"reductions", reductions},
  };
  return suites;
}

}  // namespace

void SuiteParams::validate() const {
  units.validate();
  if (!(omega > 0.0)) throw ConfigError("suites require Omega > 0");
  if (!(alpha > 0.0) || !(alpha < 0.5))
    throw ConfigError("suites require 0 < alpha < 1/2 (alpha = 0 makes b diverge)");
  if (nmax < 0 || nmax > 50) throw ConfigError("nmax must lie in [0, 50]");
  if (coulomb_states.empty()) throw ConfigError("at least one Coulomb state is required");
  for (const auto& s : coulomb_states) s.validate();
  if (random_fields < 1) throw ConfigError("random_fields must be >= 1");
  if (shells < 2 || directions < 1 || times.empty())
    throw ConfigError("grid requires >= 2 shells, >= 1 direction and >= 1 time");
  if (tolerance < 0.0) throw ConfigError("tolerance must be >= 0");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ResidualReport run_suite(std::string_view name, const SuiteParams& params,
                         const DiffConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ConfigError("unknown suite '" + std::string(name) + "'");
  params.validate();
  cfg.validate();
  const Context ctx{params, cfg,
                    params.tolerance > 0.0 ? params.tolerance : default_tolerance(cfg.mode)};
  const auto start = std::chrono::steady_clock::now();
  ResidualReport report = it->second(ctx);
  report.suite = std::string(name);
  report.mode = cfg.mode;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace kgconf

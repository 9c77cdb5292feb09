#include <gtest/gtest.h>

#include <cmath>

#include "kgconf/harness.hpp"
#include "kgconf/oscillator.hpp"

using namespace kgconf;
using namespace kgconf::oscillator;

namespace {

std::vector<SpaceTimePoint> small_grid(double length) {
  Grid g = default_grid(length);
  g.shells = 30;
  g.r_min = 0.1 * length;
  g.r_max = 5.0 * length;
  return g.points();
}

}  // namespace

TEST(OscillatorModel, Scales) {
  const Model m = Model::make(2.0, UnitSystem{1.0, 2.0, 1.0});
  EXPECT_DOUBLE_EQ(m.xi_scale(), 1.0);
  EXPECT_DOUBLE_EQ(m.length_scale(), 1.0);
  EXPECT_DOUBLE_EQ(m.map_scale(), std::sqrt(2.0));
  EXPECT_TRUE(std::isinf(Model::make(0.0).map_scale()));
  EXPECT_THROW(Model::make(-1.0), ConfigError);
}

TEST(OscillatorState, ValidationAndEnumeration) {
  EXPECT_THROW((State{{-1, 0, 0}}.validate()), QuantumNumberError);
  EXPECT_EQ(states_up_to(0).size(), 1u);
  EXPECT_EQ(states_up_to(6).size(), 84u);  // C(9, 3)
  int last = 0;
  for (const auto& s : states_up_to(6)) {
    EXPECT_GE(s.n(), last);
    last = s.n();
  }
}

TEST(OscillatorEnergy, NaturalUnitLevels) {
  const Model m = Model::make(1.0);
  EXPECT_DOUBLE_EQ(energy(m, 0), 2.0);
  EXPECT_DOUBLE_EQ(energy(m, 1), std::sqrt(6.0));
  EXPECT_DOUBLE_EQ(energy(m, 2), std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(energy(m, 3), std::sqrt(10.0));
  EXPECT_DOUBLE_EQ(energy(Model::make(0.0), 4), 1.0);
}

TEST(OscillatorEnergy, ExplicitUnits) {
  const UnitSystem u{0.5, 3.0, 2.0};
  const Model m = Model::make(0.7, u);
  for (int n = 0; n < 5; ++n) {
    const double e = energy(m, n);
    EXPECT_NEAR(e * e, 2.0 * 1.5 * 0.7 * (n + 1.5) + 18.0 * 18.0, 1e-12);
  }
}

TEST(OscillatorMap, ImaginaryTimeIsHalfXiSquared) {
  const Model m = Model::make(1.0);
  const double e = energy(m, 0);
  const ConformalMap map = conformal_map(m, e);
  EXPECT_EQ(map.a, 0.0);
  EXPECT_EQ(map.lambda, 2.0);
  for (double r : {0.3, 1.0, 2.2}) EXPECT_NEAR(map.tau(r), -(1.0 / e) * 0.5 * r * r, 1e-15);
}

TEST(OscillatorNorm, AxisFactorNormalizesEachDimension) {
  const Model m = Model::make(1.3, natural_units(), true);
  const double beta = m.xi_scale();
  for (int l = 0; l <= 6; ++l) {
    // Trapezoid on a wide window converges spectrally for Gaussians.
    const double k = axis_norm(m, l);
    double sum = 0.0;
    const double h = 0.01;
    for (double x = -15.0; x <= 15.0; x += h) {
      const double xi = beta * x;
      const double f = k * hermite(l, xi) * std::exp(-0.5 * xi * xi);
      sum += f * f * h;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12) << l;
  }
  EXPECT_EQ(axis_norm(Model::make(1.3), 3), 1.0);
}

TEST(OscillatorResidual, EigenfunctionsSatisfyBothForms) {
  const Model m = Model::make(1.0);
  const auto pts = small_grid(m.length_scale());
  for (const auto& s : states_up_to(3)) {
    for (auto cfg : {DiffConfig::exact(), DiffConfig::stencil()}) {
      const double tol = default_tolerance(cfg.mode);
      EXPECT_TRUE(kg_residual_x(m, s, pts, cfg, tol).pass());
      EXPECT_TRUE(kg_residual_z(m, s, pts, cfg, tol).pass());
      EXPECT_TRUE(energy_operator_residual(m, s, pts, cfg, tol).pass());
    }
    EXPECT_TRUE(consistency_residual(m, s, pts, 1e-12).pass());
  }
}

TEST(OscillatorResidual, WrongEnergyFails) {
  const Model m = Model::make(1.0);
  const auto pts = small_grid(1.0);
  const double e = 1.1 * energy(m, 1);
  EXPECT_GT(kg_residual_x(m, {{1, 0, 0}}, pts, DiffConfig::exact(), 1e-10, {e}).max_residual,
            1e-3);
  EXPECT_GT(kg_residual_z(m, {{1, 0, 0}}, pts, DiffConfig::exact(), 1e-10, {e}).max_residual,
            1e-3);
}

TEST(OscillatorResidual, ExplicitUnitsKeepResidualsSmall) {
  const UnitSystem u{0.5, 3.0, 2.0};
  const Model m = Model::make(0.7, u);
  const auto pts = small_grid(m.length_scale());
  EXPECT_TRUE(kg_residual_x(m, {{1, 2, 0}}, pts, DiffConfig::exact(), 1e-10).pass());
  EXPECT_TRUE(kg_residual_z(m, {{1, 2, 0}}, pts, DiffConfig::exact(), 1e-10).pass());
}

TEST(OscillatorOperator, ComplexFormHasNoPotential) {
  const Model m = Model::make(1.0);
  EXPECT_FALSE(kg_operator_z(m, energy(m, 0)).has_potential_term());
  EXPECT_TRUE(kg_operator_x(m, energy(m, 0)).has_potential_term());
}

TEST(Ladder, GroundStateIsAnnihilated) {
  const Model m = Model::make(1.0);
  const auto psi = eigenfunction_x(m, {});
  for (const auto& p : small_grid(1.0))
    for (int i = 0; i < 3; ++i)
      EXPECT_LT(std::abs(ladder_apply(m, Ladder::lower, i, psi, p, DiffConfig::exact()).value),
                1e-12);
}

TEST(Ladder, LoweringRatioIsSqrtTwo) {
  // Unnormalized Hermite functions: lower_1 psi(1,0,0) = sqrt(2) psi(0,0,0)
  // at t = 0, with H_1 = 2 xi carrying the factor.
  const Model m = Model::make(1.0);
  const auto excited = eigenfunction_x(m, {{1, 0, 0}});
  const auto ground = eigenfunction_x(m, {});
  for (const SpaceTimePoint p : {SpaceTimePoint{{0.2, 0.1, -0.3}, 0.0},
                                 SpaceTimePoint{{-0.7, 0.4, 0.5}, 0.0}}) {
    const cplx a = ladder_apply(m, Ladder::lower, 0, excited, p, DiffConfig::exact()).value;
    EXPECT_NEAR(std::abs(a / ground(p)), std::sqrt(2.0), 1e-12);
  }
}

TEST(Ladder, NumberOperatorCountsQuanta) {
  const Model m = Model::make(1.0);
  for (const auto& s : states_up_to(4)) {
    const auto psi = eigenfunction_x(m, s);
    const SpaceTimePoint p{{0.3, -0.5, 0.8}, 0.2};
    const cplx nv = number_operator(m, psi, p, DiffConfig::exact()).value;
    EXPECT_LT(std::abs(nv - double(s.n()) * psi(p)), 1e-11 * std::max(1.0, std::abs(psi(p))));
  }
}

TEST(Ladder, RequiresEnergyHint) {
  const Model m = Model::make(1.0);
  const auto plain = ComplexField::from_generic("g", [](const auto& x, const auto&) {
    using std::exp;
    return exp(-0.5 * x[0] * x[0]);
  });
  EXPECT_THROW(ladder_apply(m, Ladder::lower, 0, plain, {{0.1, 0.0, 0.0}, 0.0},
                            DiffConfig::exact()),
               ConfigError);
}

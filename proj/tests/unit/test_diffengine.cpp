#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "kgconf/diffengine.hpp"

using namespace kgconf;

namespace {

ComplexField cubic() {
  return ComplexField::from_generic("cubic", [](const auto& x, const auto& t) {
    return x[0] * x[0] * x[0] + 2.0 * x[0] * x[1] * x[2] - 3.0 * x[1] * x[1] * t + t * t * t;
  });
}

ComplexField wave() {
  return ComplexField::from_generic("wave", [](const auto& x, const auto& t) {
    using std::exp;
    return exp(kI * (0.7 * x[0] - 0.3 * x[1] + 1.1 * x[2]) - (kI * 1.3) * t -
               0.1 * x[0] * x[0]);
  });
}

cplx wave_value(const SpaceTimePoint& p) { return wave()(p); }

const SpaceTimePoint kP{{0.4, -0.9, 1.3}, 0.25};

}  // namespace

TEST(DiffConfig, Validation) {
  EXPECT_NO_THROW(DiffConfig::exact().validate());
  EXPECT_NO_THROW(DiffConfig::stencil(1e-3, 4).validate());
  EXPECT_THROW(DiffConfig::stencil(0.0, 2).validate(), ConfigError);
  EXPECT_THROW(DiffConfig::stencil(1e-3, 5).validate(), ConfigError);
  EXPECT_THROW(DiffConfig::stencil(1e-3, -1).validate(), ConfigError);
  DiffConfig cfg = DiffConfig::stencil();
  cfg.axis_steps = std::array<double, 4>{1e-3, -1.0, 1e-3, 1e-3};
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(DiffConfig, ModeNamesRoundTrip) {
  EXPECT_EQ(to_string(DiffMode::exact), "exact-forward");
  EXPECT_EQ(to_string(DiffMode::stencil), "stencil");
  EXPECT_EQ(parse_diff_mode("exact"), DiffMode::exact);
  EXPECT_EQ(parse_diff_mode("exact-forward"), DiffMode::exact);
  EXPECT_EQ(parse_diff_mode("stencil"), DiffMode::stencil);
  EXPECT_THROW(parse_diff_mode("spectral"), ConfigError);
}

TEST(Differentiate, CubicIsExactUnderFourthOrderStencil) {
  const auto f = cubic();
  const auto cfg = DiffConfig::stencil(1e-2, 2);
  for (Partial d : {Partial::d(Axis::x1), Partial::d2(Axis::x1), Partial::d2(Axis::x1, Axis::x2),
                    Partial::d2(Axis::t), Partial::d2(Axis::x2, Axis::t)}) {
    const Estimate e = differentiate_with_error(f, kP, d, cfg);
    EXPECT_LT(e.error, 1e-12) << to_string(d);
  }
  const auto [x, t] = std::pair{kP.x, kP.t};
  EXPECT_NEAR(differentiate(f, kP, Partial::d2(Axis::x1), cfg).real(), 6.0 * x[0], 1e-9);
  EXPECT_NEAR(differentiate(f, kP, Partial::d2(Axis::x2, Axis::x3), cfg).real(), 2.0 * x[0],
              1e-9);
  EXPECT_NEAR(differentiate(f, kP, Partial::d2(Axis::x2, Axis::t), cfg).real(), -6.0 * x[1],
              1e-9);
  EXPECT_NEAR(differentiate(f, kP, Partial::d(Axis::t), cfg).real(),
              -3.0 * x[1] * x[1] + 3.0 * t * t, 1e-9);
}

TEST(Differentiate, ExactModeMatchesClosedForm) {
  const auto f = wave();
  const auto cfg = DiffConfig::exact();
  const cplx v = wave_value(kP);
  const cplx dx = kI * 0.7 - 0.2 * kP.x[0];
  EXPECT_LT(std::abs(differentiate(f, kP, Partial::d(Axis::x1), cfg) - dx * v), 1e-15);
  EXPECT_LT(std::abs(differentiate(f, kP, Partial::d2(Axis::x1), cfg) - (dx * dx - 0.2) * v),
            1e-15);
  EXPECT_LT(std::abs(differentiate(f, kP, Partial::d2(Axis::x1, Axis::t), cfg) -
                     dx * (-kI * 1.3) * v),
            1e-15);
  EXPECT_LT(std::abs(differentiate(f, kP, Partial::d2(Axis::x3), cfg) - (-1.21) * v), 1e-15);
  EXPECT_EQ(estimate_error({&f, kP, Partial::d2(Axis::x3)}, cfg), 0.0);
}

TEST(Differentiate, StencilAgreesWithExactWithinEstimate) {
  const auto f = wave();
  const auto exact = DiffConfig::exact();
  const auto stencil = DiffConfig::stencil();
  for (Partial d : {Partial::d(Axis::x2), Partial::d2(Axis::x2), Partial::d2(Axis::x1, Axis::x3),
                    Partial::d2(Axis::t, Axis::x1)}) {
    const cplx a = differentiate(f, kP, d, exact);
    const Estimate b = differentiate_with_error(f, kP, d, stencil);
    // Truncation estimate plus a roundoff allowance of the finest step.
    EXPECT_LT(std::abs(a - b.value), b.error + 1e-9) << to_string(d);
  }
}

TEST(Differentiate, EstimateShrinksWithStep) {
  // Tenfold smaller base step: the truncation estimate drops by >= 10x.
  const auto f = ComplexField::from_generic("exp", [](const auto& x, const auto&) {
    using std::exp;
    return exp(1.5 * x[0]);
  });
  const SpaceTimePoint p{{0.3, 0.0, 0.0}, 0.0};
  for (int levels : {0, 1}) {
    const double coarse =
        estimate_error({&f, p, Partial::d2(Axis::x1)}, DiffConfig::stencil(1e-1, levels));
    const double fine =
        estimate_error({&f, p, Partial::d2(Axis::x1)}, DiffConfig::stencil(1e-2, levels));
    EXPECT_GT(coarse, 10.0 * fine) << "levels " << levels;
  }
  const double a = estimate_error({&f, p, Partial::d(Axis::x1)}, DiffConfig::stencil(1e-2, 0));
  const double b = estimate_error({&f, p, Partial::d(Axis::x1)}, DiffConfig::stencil(1e-3, 0));
  EXPECT_GT(a, 10.0 * b);
}

TEST(Differentiate, ShrinksNearSingularOrigin) {
  const auto f = ComplexField::from_generic("1/r", [](const auto& x, const auto&) {
                   using std::sqrt;
                   return 1.0 / sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
                 })
                     .with_singular_origin();
  const SpaceTimePoint p{{2e-3, 0.0, 0.0}, 0.0};
  const auto cfg = DiffConfig::stencil(1e-3, 2);
  EXPECT_LE(stencil_reach(f, p, Partial::d2(Axis::x1), cfg), 0.5 * 2e-3 + 1e-18);
  const cplx d = differentiate(f, p, Partial::d(Axis::x1), cfg);
  const double exact = -1.0 / (2e-3 * 2e-3);
  EXPECT_NEAR(d.real(), exact, 1e-5 * 2.5e5);
  EXPECT_LE(std::abs(d.real() - exact),
            estimate_error({&f, p, Partial::d(Axis::x1)}, cfg));
  const SpaceTimePoint origin{{0.0, 0.0, 0.0}, 0.0};
  EXPECT_THROW(differentiate(f, origin, Partial::d(Axis::x1), cfg), DomainError);
  // A regular field may be differentiated at the origin.
  EXPECT_NO_THROW(differentiate(cubic(), origin, Partial::d2(Axis::x1), cfg));
}

TEST(Differentiate, NonFiniteSamplesAreReported) {
  const auto f = ComplexField::from_generic("blowup", [](const auto& x, const auto&) {
    using std::exp;
    return exp(1000.0 * x[0]);
  });
  const SpaceTimePoint p{{1.0, 0.0, 0.0}, 0.0};
  EXPECT_THROW(differentiate(f, p, Partial::d(Axis::x1), DiffConfig::stencil()), NonFiniteError);
  EXPECT_THROW(differentiate(f, p, Partial::d(Axis::x1), DiffConfig::exact()), NonFiniteError);
}

TEST(Differentiate, PerAxisStepsOverrideBase) {
  DiffConfig cfg = DiffConfig::stencil(1e-3, 1);
  cfg.axis_steps = std::array<double, 4>{1e-2, 2e-2, 3e-2, 4e-2};
  EXPECT_EQ(cfg.step(Axis::x2), 2e-2);
  EXPECT_EQ(cfg.step(Axis::t), 4e-2);
  const auto f = wave();
  const cplx a = differentiate(f, kP, Partial::d2(Axis::x3), cfg);
  const cplx b = differentiate(f, kP, Partial::d2(Axis::x3), DiffConfig::exact());
  EXPECT_LT(std::abs(a - b), 1e-8);
}

TEST(Differentiate, MissingFieldIsConfigError) {
  EXPECT_THROW(differentiate(DerivativeRequest{nullptr, kP, Partial::d(Axis::x1)},
                             DiffConfig::exact()),
               ConfigError);
}

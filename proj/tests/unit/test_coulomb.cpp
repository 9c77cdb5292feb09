#include <gtest/gtest.h>

#include <cmath>

#include "kgconf/coulomb.hpp"
#include "kgconf/harness.hpp"

using namespace kgconf;
using namespace kgconf::coulomb;

namespace {

constexpr double kAlpha = 0.0072973525693;

std::vector<SpaceTimePoint> radial_window(double r_nl, int shells = 40) {
  Grid g = default_grid(r_nl);
  g.shells = shells;
  return g.points();
}

}  // namespace

TEST(CoulombEta, Values) {
  const Model m = Model::make(kAlpha);
  EXPECT_NEAR(eta(m, 0, Branch::sommerfeld), 5.3254190529478e-05, 1e-17);
  EXPECT_EQ(eta(Model::make(0.0), 0, Branch::sommerfeld), 0.0);
  EXPECT_EQ(eta(Model::make(0.0), 0, Branch::hydrino), 1.0);
  EXPECT_NEAR(eta(m, 2, Branch::sommerfeld), -2.0, 1e-4);
  for (int l = 0; l < 5; ++l) {
    EXPECT_NEAR(eta(m, l, Branch::sommerfeld) + eta(m, l, Branch::hydrino), 1.0, 1e-15);
    EXPECT_NEAR(one_minus_eta(m, l, Branch::sommerfeld), 1.0 - eta(m, l, Branch::sommerfeld),
                1e-15);
  }
  EXPECT_THROW(eta(Model::make(0.6), 0, Branch::sommerfeld), BranchError);
}

TEST(CoulombEta, ProductIdentityBothBranches) {
  for (double alpha : {1e-4, kAlpha, 0.1, 0.3, 0.49}) {
    const Model m = Model::make(alpha);
    for (Branch b : {Branch::sommerfeld, Branch::hydrino}) {
      const double a = eta(m, 0, b);
      EXPECT_NEAR(a * one_minus_eta(m, 0, b), alpha * alpha, 1e-16 * alpha * alpha * 4)
          << alpha;
    }
  }
}

TEST(CoulombEnergy, ExpansionInAlpha) {
  // m0 c^2 [1 - a^2/(2N^2) - a^4/(2N^4) (N/(l+1/2) - 3/4)] + O(a^6).
  const Model m = Model::make(kAlpha);
  const double a2 = kAlpha * kAlpha;
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) {
      const double big_n = n + l + 1.0;
      const double expansion =
          1.0 - a2 / (2 * big_n * big_n) -
          a2 * a2 / (2 * std::pow(big_n, 4)) * (big_n / (l + 0.5) - 0.75);
      EXPECT_NEAR(energy(m, {n, l, 0}), expansion, 10.0 * a2 * a2 * a2) << n << "," << l;
    }
}

TEST(CoulombEnergy, NonrelativisticBinding) {
  const Model m = Model::make(kAlpha);
  for (auto [n, l] : {std::pair{0, 0}, {1, 0}, {0, 1}, {2, 1}}) {
    const double big_n = n + l + 1.0;
    const double binding = 1.0 - energy(m, {n, l, 0});
    const double bohr = kAlpha * kAlpha / (2.0 * big_n * big_n);
    EXPECT_NEAR(binding / bohr, 1.0, 1e-4);
  }
}

TEST(CoulombEnergy, OrderingProperties) {
  const Model m = Model::make(kAlpha);
  for (int l = 0; l < 3; ++l)
    for (int n = 0; n < 5; ++n) {
      const double e = energy(m, {n, l, 0});
      EXPECT_GT(e, 0.0);
      EXPECT_LT(e, 1.0);
      EXPECT_LT(e, energy(m, {n + 1, l, 0}));
    }
  EXPECT_GT(energy(Model::make(0.005), {0, 0, 0}), energy(Model::make(0.01), {0, 0, 0}));
}

TEST(CoulombState, Validation) {
  const Model m = Model::make(kAlpha);
  EXPECT_THROW(energy(m, {0, 1, 2}), QuantumNumberError);
  EXPECT_THROW(energy(m, {-1, 0, 0}), QuantumNumberError);
  // Hydrino exponents for l >= 1 leave n + 1 - eta_l <= 0 at small n.
  EXPECT_THROW(energy(m, {0, 1, 0, Branch::hydrino}), BranchError);
  EXPECT_NO_THROW(energy(m, {0, 0, 0, Branch::hydrino}));
  EXPECT_EQ((State{1, 2, -1, Branch::hydrino}.label()), "(1,2,-1) hydrino");
}

TEST(CoulombMap, CoefficientsAndIdentities) {
  const Model m = Model::make(kAlpha);
  for (const State s : {State{0, 0, 0}, State{1, 0, 0}, State{0, 1, 1}, State{2, 1, 0}}) {
    const MapCoefficients c = map_coefficients(m, s);
    EXPECT_EQ(c.a, eta(m, 0, Branch::sommerfeld));
    const double r_nl = radial_scale(m, s);
    EXPECT_NEAR(r_nl / c.b - transformed_rate(m, s), 1.0, 1e-14);
    const double e = energy(m, s);
    EXPECT_NEAR(e * e + 1.0 / (c.b * c.b), transformed_eigenvalue(m, s), 1e-14);
    const ConformalMap map = conformal_map(m, s);
    EXPECT_EQ(map.lambda, 1.0);
    EXPECT_EQ(map.energy, e);
  }
  // Ground state: b = r_00.
  EXPECT_NEAR(map_coefficients(m, {}).b, radial_scale(m, {}), 1e-12);
}

TEST(CoulombMap, ZeroCouplingIsRejected) {
  const Model m = Model::make(0.0);
  EXPECT_NO_THROW(energy(m, {}));
  EXPECT_DOUBLE_EQ(energy(m, {}), 1.0);
  try {
    map_coefficients(m, {});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("diverges"), std::string::npos);
  }
}

TEST(CoulombResidual, SmallestStatesBothForms) {
  const Model m = Model::make(kAlpha);
  for (const State s : {State{0, 0, 0}, State{1, 0, 0}, State{0, 1, -1}, State{0, 1, 1}}) {
    const auto pts = radial_window(radial_scale(m, s));
    EXPECT_TRUE(kg_residual_x(m, s, pts, DiffConfig::exact(), 1e-10).pass()) << s.label();
    EXPECT_TRUE(kg_residual_z(m, s, pts, DiffConfig::exact(), 1e-10).pass()) << s.label();
    EXPECT_TRUE(consistency_residual(m, s, pts, 1e-12).pass()) << s.label();
    EXPECT_TRUE(radial_ode_residual(m, s, 0.1, 20.0, 200, 1e-10).pass()) << s.label();
  }
}

TEST(CoulombResidual, GroundStateComplexLaplacianVanishes) {
  const Model m = Model::make(kAlpha);
  const auto pts = radial_window(radial_scale(m, {}));
  EXPECT_LT(complex_laplacian_residual(m, {}, pts, DiffConfig::exact(), 1e-10).max_residual,
            1e-10);
  // An excited state does not satisfy it.
  const State s{1, 0, 0};
  EXPECT_GT(complex_laplacian_residual(m, s, radial_window(radial_scale(m, s)),
                                       DiffConfig::exact(), 1e-10)
                .max_residual,
            1e-6);
}

TEST(CoulombResidual, HydrinoGroundState) {
  const Model m = Model::make(kAlpha);
  const State s{0, 0, 0, Branch::hydrino};
  const auto pts = radial_window(radial_scale(m, s));
  EXPECT_TRUE(kg_residual_x(m, s, pts, DiffConfig::exact(), 1e-10).pass());
  EXPECT_TRUE(kg_residual_x(m, s, pts, DiffConfig::stencil(), 1e-8).pass());
  EXPECT_TRUE(kg_residual_z(m, s, pts, DiffConfig::exact(), 1e-10).pass());
  EXPECT_TRUE(radial_ode_residual(m, s, 0.1, 20.0, 200, 1e-10).pass());
}

TEST(CoulombResidual, WrongEnergyFails) {
  const Model m = Model::make(kAlpha);
  const auto pts = radial_window(radial_scale(m, {}));
  const double e = 1.01 * energy(m, {});
  EXPECT_GT(kg_residual_x(m, {}, pts, DiffConfig::exact(), 1e-10, {e}).max_residual, 1e-3);
}

TEST(CoulombEigenfunction, SingularAtOrigin) {
  const Model m = Model::make(kAlpha);
  const auto psi = eigenfunction_x(m, {0, 1, 0});
  EXPECT_TRUE(psi.singular_at_origin());
  EXPECT_THROW(differentiate(psi, {{0.0, 0.0, 0.0}, 0.0}, Partial::d(Axis::x1),
                             DiffConfig::stencil()),
               DomainError);
}

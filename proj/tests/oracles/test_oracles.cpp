// Frozen reference values and the checks that regenerate them.

#include <gtest/gtest.h>

#include <cmath>

#include "kgconf/coulomb.hpp"
#include "frozen.hpp"
#include "oracles.hpp"

using oracle::frozen::kAlpha;
using oracle::frozen::kShooting;

TEST(ShootingOracle, FrozenValuesReproduce) {
  for (const auto& f : kShooting) {
    const auto r = oracle::shooting_energy(f.n, f.l, kAlpha, 20000);
    EXPECT_NEAR(double(r.energy), f.energy, 1e-14) << f.n << "," << f.l;
    EXPECT_EQ(r.nodes, f.n);
  }
}

TEST(ShootingOracle, LibrarySpectrumAgrees) {
  const auto model = kgconf::coulomb::Model::make(kAlpha);
  for (const auto& f : kShooting) {
    const double e = kgconf::coulomb::energy(model, {f.n, f.l, 0});
    EXPECT_NEAR(e / f.energy, 1.0, 1e-6);
    // Much tighter than required: the binding energy itself to 1e-9.
    EXPECT_NEAR((1.0 - e) / (1.0 - f.energy), 1.0, 1e-9);
  }
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto rule = oracle::gauss_legendre(10);
  for (int k = 0; k < 20; ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      sum += rule.weights[i] * std::pow(rule.nodes[i], k);
    EXPECT_NEAR(sum, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-14) << k;
  }
}

TEST(HermiteSeries, KnownValues) {
  EXPECT_NEAR(double(oracle::hermite_series(4, 0.5L)), 16 * 0.0625 - 48 * 0.25 + 12, 1e-15);
  EXPECT_NEAR(double(oracle::hermite_series(5, 1.0L)), 32 - 160 + 120, 1e-13);
}

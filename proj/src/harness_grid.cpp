#include <cmath>
#include <random>

#include "kgconf/harness.hpp"

namespace kgconf {

void Grid::validate() const {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
    throw ConfigError("grid requires 0 < r_min < r_max");
  if (shells < 2) throw ConfigError("grid requires at least 2 shells");
  if (directions.empty()) throw ConfigError("grid requires at least one direction");
  if (times.empty()) throw ConfigError("grid requires at least one time sample");
}

std::vector<SpaceTimePoint> Grid::points() const {
  validate();
  std::vector<SpaceTimePoint> out;
  out.reserve(static_cast<std::size_t>(shells) * directions.size() * times.size());
  const double ratio = std::log(r_max / r_min);
  for (int k = 0; k < shells; ++k) {
    const double r = k == shells - 1 ? r_max : r_min * std::exp(ratio * k / (shells - 1));
    for (const Vec3& d : directions)
      for (double t : times) out.push_back({{r * d[0], r * d[1], r * d[2]}, t});
  }
  return out;
}

std::vector<SpaceTimePoint> Grid::boundary_points() const {
  validate();
  std::vector<SpaceTimePoint> out;
  for (const Vec3& d : directions)
    for (double t : times) out.push_back({{r_max * d[0], r_max * d[1], r_max * d[2]}, t});
  return out;
}

std::vector<Vec3> fibonacci_directions(int count) {
  if (count < 1) throw ConfigError("direction count must be >= 1");
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double rho = std::sqrt(1.0 - z * z);
    const double phi = golden * i;
    out.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
  }
  return out;
}

Grid default_grid(double length) {
  Grid g;
  g.r_min = 0.1 * length;
  g.r_max = 20.0 * length;
  g.shells = 200;
  g.directions = fibonacci_directions(12);
  g.times = {0.0, 0.5};
  return g;
}

ComplexField generate_test_field(const TestFieldSpec& spec) {
  if (!(spec.length > 0.0) || !(spec.min_width > 0.0) || spec.max_width < spec.min_width)
    throw ConfigError("test field requires positive length and widths");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  auto random_cplx = [&] { return cplx(unit(rng), unit(rng)); };

  const double L = spec.length;
  Vec3 dir{unit(rng), unit(rng), unit(rng)};
  const double norm = radial_norm(dir);
  const double radius = fraction(rng) * spec.max_centre * L;
  Vec3 centre{};
  for (int j = 0; j < 3; ++j) centre[j] = norm > 0.0 ? radius * dir[j] / norm : 0.0;
  const double width = (spec.min_width + fraction(rng) * (spec.max_width - spec.min_width)) * L;
  const cplx c0 = 1.0 + 0.5 * random_cplx();
  std::array<cplx, 3> linear{random_cplx(), random_cplx(), random_cplx()};
  std::array<cplx, 3> quadratic{random_cplx(), random_cplx(), random_cplx()};
  Vec3 wave{};
  for (double& k : wave) k = unit(rng) * spec.max_wavenumber / L;
  const double omega_t = spec.energy / spec.hbar;

  return ComplexField::from_generic(
             "test field seed " + std::to_string(spec.seed),
             [=](const auto& x, const auto& t) {
               using std::exp;
               using S = std::remove_cvref_t<decltype(t)>;
               std::array<S, 3> u;
               for (int j = 0; j < 3; ++j) u[j] = (x[j] - centre[j]) / width;
               S poly(c0);
               S gauss(0.0);
               S phase(0.0);
               for (int j = 0; j < 3; ++j) {
                 poly = poly + linear[j] * u[j] + quadratic[j] * u[j] * u[(j + 1) % 3];
                 gauss = gauss + u[j] * u[j];
                 phase = phase + wave[j] * x[j];
               }
               return poly * exp(-0.5 * gauss + kI * phase - (kI * omega_t) * t);
             })
      .with_energy_hint(spec.energy);
}

}  // namespace kgconf

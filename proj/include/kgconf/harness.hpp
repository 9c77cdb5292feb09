#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kgconf/coulomb.hpp"
#include "kgconf/field.hpp"
#include "kgconf/kernels.hpp"
#include "kgconf/oscillator.hpp"
#include "kgconf/report.hpp"

namespace kgconf {

/// Log-spaced radial shells times a fixed direction set times time samples.
struct Grid {
  double r_min = 0.1;
  double r_max = 20.0;
  int shells = 200;
  std::vector<Vec3> directions;
  std::vector<double> times{0.0, 0.5};

  /// Throws ConfigError unless 0 < r_min < r_max and shells >= 2.
  void validate() const;
  std::vector<SpaceTimePoint> points() const;
  /// Points on the outermost shell.
  std::vector<SpaceTimePoint> boundary_points() const;
};

/// Quasi-uniform unit vectors on a golden-angle spiral.
std::vector<Vec3> fibonacci_directions(int count);

/// r in [0.1, 20] * length, 200 shells, 12 directions, t in {0, 0.5}.
Grid default_grid(double length);

struct TestFieldSpec {
  std::uint64_t seed = 1;
  double energy = 1.0;  // carried as e^{-iEt/hbar} and as the energy hint
  double hbar = 1.0;
  double length = 1.0;  // bump widths and centre offsets scale with this
  double max_centre = 3.0;
  double min_width = 0.5;
  double max_width = 1.0;
  double max_wavenumber = 1.0;  // in units of 1/length
};

/// Gaussian bump x quadratic polynomial x plane-wave phase x e^{-iEt/hbar},
/// reproducible from the seed.
ComplexField generate_test_field(const TestFieldSpec& spec);

struct SuiteParams {
  UnitSystem units = natural_units();
  double omega = 1.0;
  double alpha = 0.0072973525693;
  int nmax = 6;
  std::vector<coulomb::State> coulomb_states{
      {0, 0, 0, Branch::sommerfeld}, {1, 0, 0, Branch::sommerfeld},
      {0, 1, -1, Branch::sommerfeld}, {0, 1, 0, Branch::sommerfeld},
      {0, 1, 1, Branch::sommerfeld}};
  std::uint64_t seed = 20251014;
  int random_fields = 100;
  // Overrides the per-mode default tolerance of ordinary cases.
  double tolerance = 0.0;
  int shells = 200;
  int directions = 12;
  std::vector<double> times{0.0, 0.5};
  Execution exec = Execution::parallel;

  void validate() const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws ConfigError for unknown names or invalid
/// parameters. Deterministic: identical inputs give identical reports.
ResidualReport run_suite(std::string_view name, const SuiteParams& params,
                         const DiffConfig& cfg);

}  // namespace kgconf

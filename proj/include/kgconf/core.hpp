#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace kgconf {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Error hierarchy. The CLI maps these onto its exit-code contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NonFiniteError : Error {
  using Error::Error;
};
struct QuantumNumberError : ConfigError {
  using ConfigError::ConfigError;
};
struct BranchError : ConfigError {
  using ConfigError::ConfigError;
};
struct NoTerminationError : Error {
  using Error::Error;
};

/// Values of hbar, c and the rest mass that fix the unit convention.
struct UnitSystem {
  double hbar = 1.0;
  double c = 1.0;
  double m0 = 1.0;

  double rest_energy() const { return m0 * c * c; }
  double hbar_c() const { return hbar * c; }

  // hbar and c strictly positive, m0 may be zero.
  void validate() const {
    if (!(hbar > 0.0) || !(c > 0.0) || !(m0 >= 0.0) || !std::isfinite(hbar) ||
        !std::isfinite(c) || !std::isfinite(m0))
      throw ConfigError("unit system requires hbar > 0, c > 0, m0 >= 0");
  }
};

inline UnitSystem natural_units() { return {1.0, 1.0, 1.0}; }

struct SpaceTimePoint {
  Vec3 x{};
  double t = 0.0;
};

/// Point of the complex representation: z equals x, s is complex time.
struct ComplexPoint {
  Vec3 z{};
  cplx s{};
};

inline double radial_norm(const Vec3& x) {
  return std::hypot(x[0], x[1], x[2]);
}

// Generic form for scalar types threaded through the field evaluators.
template <class S>
S radial_norm_of(const std::array<S, 3>& x) {
  using std::sqrt;
  return sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

inline bool finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace kgconf

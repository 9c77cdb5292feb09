#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "kgconf/field.hpp"

namespace kgconf {

enum class Axis { x1 = 0, x2 = 1, x3 = 2, t = 3 };

inline Axis spatial_axis(int i) { return static_cast<Axis>(i); }
inline bool is_spatial(Axis a) { return a != Axis::t; }

/// A first or second partial derivative. Second partials may be mixed.
struct Partial {
  Axis first = Axis::x1;
  std::optional<Axis> second;

  static Partial d(Axis a) { return {a, std::nullopt}; }
  static Partial d2(Axis a) { return {a, a}; }
  static Partial d2(Axis a, Axis b) { return {a, b}; }

  int order() const { return second ? 2 : 1; }
  friend bool operator==(const Partial&, const Partial&) = default;
};

std::string to_string(const Partial& p);

enum class DiffMode { stencil, exact };

std::string_view to_string(DiffMode mode);
DiffMode parse_diff_mode(std::string_view text);

struct DiffConfig {
  DiffMode mode = DiffMode::exact;
  double base_step = 1e-3;
  int richardson_levels = 2;
  // Per-axis step in (x1, x2, x3, t) order; replaces base_step when set.
  std::optional<std::array<double, 4>> axis_steps;

  static DiffConfig exact() { return {}; }
  static DiffConfig stencil(double step = 1e-3, int levels = 2) {
    DiffConfig cfg;
    cfg.mode = DiffMode::stencil;
    cfg.base_step = step;
    cfg.richardson_levels = levels;
    return cfg;
  }

  double step(Axis a) const {
    return axis_steps ? (*axis_steps)[static_cast<int>(a)] : base_step;
  }

  /// Throws ConfigError unless steps are positive and levels are in [0, 4].
  void validate() const;
};

struct DerivativeRequest {
  const ComplexField* field = nullptr;
  SpaceTimePoint point;
  Partial which;
};

/// Derivative value together with its truncation estimate.
struct Estimate {
  cplx value{};
  double error = 0.0;
};

// Stencil mode: fourth-order central differences with Richardson
// extrapolation over steps base_step * 2^k, k = levels..0, so the finest
// step is base_step. Exact mode: hyper-dual seeding, rounding error only.
Estimate differentiate_with_error(const DerivativeRequest& req,
                                  const DiffConfig& cfg);

inline cplx differentiate(const DerivativeRequest& req, const DiffConfig& cfg) {
  return differentiate_with_error(req, cfg).value;
}

inline double estimate_error(const DerivativeRequest& req,
                             const DiffConfig& cfg) {
  return differentiate_with_error(req, cfg).error;
}

inline Estimate differentiate_with_error(const ComplexField& f,
                                         const SpaceTimePoint& p, Partial which,
                                         const DiffConfig& cfg) {
  return differentiate_with_error(DerivativeRequest{&f, p, which}, cfg);
}

inline cplx differentiate(const ComplexField& f, const SpaceTimePoint& p,
                          Partial which, const DiffConfig& cfg) {
  return differentiate_with_error(f, p, which, cfg).value;
}

// Spatial distance from p that a stencil evaluation may reach, after the
// automatic shrink near r = 0. Exposed for tests.
double stencil_reach(const ComplexField& f, const SpaceTimePoint& p,
                     Partial which, const DiffConfig& cfg);

}  // namespace kgconf

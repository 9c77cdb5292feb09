#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "kgconf/core.hpp"
#include "kgconf/hyperdual.hpp"

namespace kgconf {

using Jet = HyperDual<cplx>;

template <class S>
using Coords = std::array<S, 3>;

/// A complex scalar field psi(x, t).
///
/// Fields are built from one generic callable `f(const Coords<S>& x, S t)`
/// that is instantiated twice: once over plain complex numbers (used by the
/// stencil path) and once over hyper-dual jets (used by the exact path). The
/// coordinates passed in always have zero imaginary part.
class ComplexField {
 public:
  using ValueFn = std::function<cplx(const Coords<cplx>&, cplx)>;
  using JetFn = std::function<Jet(const Coords<Jet>&, const Jet&)>;

  ComplexField() = default;
  ComplexField(std::string label, ValueFn value, JetFn jet)
      : label_(std::move(label)), value_(std::move(value)), jet_(std::move(jet)) {}

  template <class F>
  static ComplexField from_generic(std::string label, F f) {
    return ComplexField(
        std::move(label),
        [f](const Coords<cplx>& x, cplx t) { return cplx(f(x, t)); },
        [f](const Coords<Jet>& x, const Jet& t) { return Jet(f(x, t)); });
  }

  cplx operator()(const SpaceTimePoint& p) const {
    return value_({cplx(p.x[0]), cplx(p.x[1]), cplx(p.x[2])}, cplx(p.t));
  }
  Jet jet(const Coords<Jet>& x, const Jet& t) const { return jet_(x, t); }

  const std::string& label() const { return label_; }

  /// Energy eigenvalue of the e^{-iEt/hbar} time dependence, when known.
  std::optional<double> energy_hint() const { return energy_hint_; }
  ComplexField& with_energy_hint(double e) {
    energy_hint_ = e;
    return *this;
  }

  /// Fields singular at r = 0 (ln r, 1/r, r^-eta). Stencils never reach it.
  bool singular_at_origin() const { return singular_at_origin_; }
  ComplexField& with_singular_origin(bool singular = true) {
    singular_at_origin_ = singular;
    return *this;
  }

 private:
  std::string label_;
  ValueFn value_;
  JetFn jet_;
  std::optional<double> energy_hint_;
  bool singular_at_origin_ = false;
};

}  // namespace kgconf

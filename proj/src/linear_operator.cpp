#include "kgconf/linear_operator.hpp"

#include <utility>

namespace kgconf {

LinearOperator& LinearOperator::add_derivative(std::string label, Partial d,
                                               cplx constant) {
  terms_.push_back({std::move(label), d, [constant](const Vec3&) { return constant; },
                    false});
  return *this;
}

LinearOperator& LinearOperator::add_derivative(
    std::string label, Partial d, std::function<cplx(const Vec3&)> coefficient) {
  terms_.push_back({std::move(label), d, std::move(coefficient), true});
  return *this;
}

LinearOperator& LinearOperator::add_constant(std::string label, cplx constant) {
  terms_.push_back({std::move(label), std::nullopt,
                    [constant](const Vec3&) { return constant; }, false});
  return *this;
}

LinearOperator& LinearOperator::add_multiplier(
    std::string label, std::function<cplx(const Vec3&)> coefficient) {
  terms_.push_back({std::move(label), std::nullopt, std::move(coefficient), true});
  return *this;
}

LinearOperator& LinearOperator::append(const LinearOperator& other, cplx scale) {
  for (const auto& term : other.terms_) {
    OperatorTerm t = term;
    if (scale != cplx(1.0)) {
      t.coefficient = [c = term.coefficient, scale](const Vec3& x) {
        return scale * c(x);
      };
    }
    terms_.push_back(std::move(t));
  }
  return *this;
}

Estimate LinearOperator::apply(const ComplexField& f, const SpaceTimePoint& p,
                               const DiffConfig& cfg) const {
  // Terms frequently share a derivative (the d/dt pieces of every axis).
  std::vector<std::pair<Partial, Estimate>> cache;
  auto derivative = [&](Partial d) {
    for (const auto& [key, est] : cache)
      if (key == d) return est;
    Estimate est = differentiate_with_error(f, p, d, cfg);
    cache.emplace_back(d, est);
    return est;
  };

  std::optional<cplx> value;
  Estimate out;
  for (const auto& term : terms_) {
    const cplx coeff = term.coefficient(p.x);
    if (coeff == cplx(0.0)) continue;
    if (term.derivative) {
      const Estimate d = derivative(*term.derivative);
      out.value += coeff * d.value;
      out.error += std::abs(coeff) * d.error;
    } else {
      if (!value) value = f(p);
      out.value += coeff * *value;
    }
  }
  return out;
}

bool LinearOperator::has_potential_term() const {
  for (const auto& t : terms_)
    if (!t.derivative && t.position_dependent) return true;
  return false;
}

}  // namespace kgconf

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgconf/diffengine.hpp"

namespace kgconf {

/// One term coefficient(x) * D psi, or coefficient(x) * psi when D is empty.
struct OperatorTerm {
  std::string label;
  std::optional<Partial> derivative;
  std::function<cplx(const Vec3&)> coefficient;
  bool position_dependent = false;
};

/// Linear differential operator applied pointwise through the diffengine.
class LinearOperator {
 public:
  LinearOperator& add_derivative(std::string label, Partial d, cplx constant);
  LinearOperator& add_derivative(std::string label, Partial d,
                                 std::function<cplx(const Vec3&)> coefficient);
  LinearOperator& add_constant(std::string label, cplx constant);
  // A zeroth-order term whose coefficient depends on position, i.e. a
  // potential.
  LinearOperator& add_multiplier(std::string label,
                                 std::function<cplx(const Vec3&)> coefficient);
  LinearOperator& append(const LinearOperator& other, cplx scale = 1.0);

  /// Value and propagated error bound sum |coefficient| * error.
  Estimate apply(const ComplexField& f, const SpaceTimePoint& p,
                 const DiffConfig& cfg) const;

  bool has_potential_term() const;
  const std::vector<OperatorTerm>& terms() const { return terms_; }

 private:
  std::vector<OperatorTerm> terms_;
};

}  // namespace kgconf

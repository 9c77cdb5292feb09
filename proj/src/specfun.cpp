#include "kgconf/specfun.hpp"

#include <cmath>
#include <string>

namespace kgconf {

double spherical_harmonic_norm(int l, int m) {
  // (l-m)!/(l+m)! as a running product.
  double ratio = 1.0;
  for (int j = l - m + 1; j <= l + m; ++j) ratio /= j;
  return std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * ratio);
}

cplx spherical_harmonic(int l, int k, double theta, double phi) {
  const double st = std::sin(theta);
  const cplx u(std::cos(theta));
  return spherical_harmonic_uw<cplx>(l, k, u, st * std::exp(kI * phi),
                                     st * std::exp(-kI * phi));
}

std::string_view to_string(Branch b) {
  return b == Branch::sommerfeld ? "sommerfeld" : "hydrino";
}

Branch parse_branch(std::string_view text) {
  if (text == "sommerfeld" || text == "-") return Branch::sommerfeld;
  if (text == "hydrino" || text == "+") return Branch::hydrino;
  throw ConfigError("unknown branch '" + std::string(text) + "'");
}

RadialPolynomial radial_polynomial(int n, int l, double alpha, Branch branch) {
  if (n < 0 || l < 0)
    throw QuantumNumberError("radial polynomial requires n >= 0 and l >= 0");
  const double radicand = (l + 0.5) * (l + 0.5) - alpha * alpha;
  if (!(alpha > 0.0) || !(radicand > 0.0))
    throw BranchError("radial polynomial requires 0 < alpha < l + 1/2");
  const double root = std::sqrt(radicand);
  // 1 - eta_l for either sign, without cancellation at l = 0.
  const double one_minus_eta = branch == Branch::sommerfeld
                                   ? 0.5 + root
                                   : (alpha * alpha - l * (l + 1.0)) / (0.5 + root);
  const double nu = n + one_minus_eta;
  // Natural units: m0 = c = hbar = 1.
  const double q = alpha * alpha / (nu * nu);
  const double energy = 1.0 / std::sqrt(1.0 + q);
  // kappa^2 = 1 - E^2, written as q E^2 to avoid cancellation near E = 1.
  const double kappa = std::sqrt(q * energy * energy);
  const double coupling = 2.0 * energy * alpha / kappa;
  const double gamma = 2.0 * one_minus_eta;

  RadialPolynomial p;
  p.n = n;
  p.l = l;
  p.branch = branch;
  p.coefficients.assign(1, 1.0);
  for (int j = 0; j < n; ++j) {
    const double denom = (j + 1.0) * (j + gamma);
    p.coefficients.push_back((2.0 * j + gamma - coupling) * p.coefficients[j] / denom);
  }
  // Factor that would produce c_{n+1}, relative to the terms it balances.
  const double last = 2.0 * n + gamma - coupling;
  p.termination_residual = std::abs(last) / (2.0 * n + std::abs(gamma) + coupling);
  if (!(p.termination_residual < 1e-10))
    throw NoTerminationError("radial recurrence does not terminate at degree " +
                             std::to_string(n));
  return p;
}

}  // namespace kgconf

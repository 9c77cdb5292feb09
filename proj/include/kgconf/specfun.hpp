#pragma once

#include <string_view>
#include <vector>

#include "kgconf/core.hpp"
#include "kgconf/hyperdual.hpp"

namespace kgconf {

/// Physicists' Hermite polynomial H_l via the three-term recurrence
/// H_{k+1} = 2 xi H_k - 2 k H_{k-1}. Works for real, complex and jet xi.
template <class T>
T hermite(int l, const T& xi) {
  T prev(1.0);
  if (l == 0) return prev;
  T cur = 2.0 * xi;
  for (int k = 1; k < l; ++k) {
    T next = 2.0 * xi * cur - (2.0 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) for m >= 0.
double spherical_harmonic_norm(int l, int m);

/// Orthonormal Y_lk with Condon-Shortley phase written through
/// u = cos(theta) and w+- = sin(theta) e^{+-i phi}, so that Cartesian callers
/// can pass u = z/r and w+- = (x +- i y)/r and stay differentiable.
template <class T>
T spherical_harmonic_uw(int l, int k, const T& u, const T& w_plus,
                        const T& w_minus) {
  if (l < 0 || k > l || -k > l)
    throw QuantumNumberError("spherical harmonic requires |k| <= l");
  const int m = k < 0 ? -k : k;
  // Q_l^m(u) = P_l^m(u) / (1-u^2)^{m/2}, a polynomial in u.
  double qmm = 1.0;
  for (int j = 1; j <= m; ++j) qmm *= -(2.0 * j - 1.0);
  T q_prev(qmm);
  T q = q_prev;
  if (l > m) {
    q = (2.0 * m + 1.0) * u * q_prev;
    for (int ll = m + 2; ll <= l; ++ll) {
      T next = ((2.0 * ll - 1.0) * u * q - (ll + m - 1.0) * q_prev) / double(ll - m);
      q_prev = q;
      q = next;
    }
  }
  // Y_{l,-m} = (-1)^m conj(Y_lm); the (-1)^m cancels against Q's phase.
  const double norm = spherical_harmonic_norm(l, m) * (k < 0 && m % 2 ? -1.0 : 1.0);
  return norm * q * ipow(k < 0 ? w_minus : w_plus, m);
}

/// Y_lk(theta, phi).
cplx spherical_harmonic(int l, int k, double theta, double phi);

enum class Branch { sommerfeld, hydrino };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view text);

/// Degree-n polynomial p_n(x) = sum c_j x^j multiplying r^{-eta} e^{-x},
/// x = r / r_nl, in the Coulomb Klein-Gordon radial function.
struct RadialPolynomial {
  int n = 0;
  int l = 0;
  Branch branch = Branch::sommerfeld;
  std::vector<double> coefficients;  // c_0 .. c_n, c_0 = 1
  // Size of the would-be c_{n+1} produced by the recurrence at the
  // quantized energy; zero up to rounding.
  double termination_residual = 0.0;

  template <class T>
  T operator()(const T& x) const {
    T acc(coefficients.back());
    for (int j = static_cast<int>(coefficients.size()) - 2; j >= 0; --j)
      acc = acc * x + coefficients[j];
    return acc;
  }
};

/// Runs the two-term Frobenius recurrence
///   c_{j+1} = [2j + 2(1 - eta_l) - 2 E alpha / kappa] c_j
///             / [(j+1)(j + 2(1 - eta_l))]
/// with E from the Sommerfeld formula and kappa = sqrt(m0^2 c^4 - E^2)/hbar c
/// (natural units), and checks that the factor vanishes at j = n.
/// Throws BranchError if alpha >= l + 1/2, NoTerminationError if the
/// recurrence fails to terminate.
RadialPolynomial radial_polynomial(int n, int l, double alpha,
                                   Branch branch = Branch::sommerfeld);

}  // namespace kgconf

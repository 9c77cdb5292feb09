#pragma once

// Independent reference computations used to freeze expected values. None
// of these call into the library.

#include <cmath>
#include <vector>

namespace oracle {

/// Physicists' Hermite polynomial from the explicit sum
/// H_n(x) = n! sum_m (-1)^m (2x)^(n-2m) / (m! (n-2m)!).
inline long double hermite_series(int n, long double x) {
  long double sum = 0.0L;
  for (int m = 0; 2 * m <= n; ++m) {
    const long double term = std::pow(2.0L * x, n - 2 * m) /
                             (std::tgamma(m + 1.0L) * std::tgamma(n - 2 * m + 1.0L));
    sum += (m % 2 ? -term : term);
  }
  return std::tgamma(n + 1.0L) * sum;
}

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    rule.nodes[i] = double(x);
    rule.weights[i] = double(2.0L / ((1.0L - x * x) * dp * dp));
  }
  return rule;
}

/// Bound-state energy of the radial Klein-Gordon Coulomb problem
///   u'' + [E^2 - 1 + 2 E alpha / r + (alpha^2 - l(l+1)) / r^2] u = 0
/// (hbar = c = m0 = 1), found by shooting outward from the regular solution
/// u ~ r^p, p = 1/2 + sqrt((l+1/2)^2 - alpha^2), and bisecting on the node
/// count. Integration runs in x = ln r over r in [1e-3, 40] * N / alpha.
struct ShootingResult {
  long double energy;
  int nodes;
};

inline int count_nodes(long double e, int l, long double alpha, long double r_lo,
                       long double r_hi, int steps) {
  const long double p = 0.5L + std::sqrt((l + 0.5L) * (l + 0.5L) - alpha * alpha);
  const long double k2 = e * e - 1.0L;
  const long double centrifugal = alpha * alpha - l * (l + 1.0L);
  // y(x) = u(e^x): y'' - y' + r^2 Q(r) y = 0.
  auto rhs = [&](long double x, long double y, long double dy, long double& ddy) {
    const long double r = std::exp(x);
    const long double q = k2 + 2.0L * e * alpha / r + centrifugal / (r * r);
    ddy = dy - r * r * q * y;
  };
  const long double x0 = std::log(r_lo), x1 = std::log(r_hi);
  const long double h = (x1 - x0) / steps;
  // Start on the regular Frobenius series u = r^p sum c_j r^j, with
  // [(p+j)(p+j-1) + alpha^2 - l(l+1)] c_j = -2 E alpha c_{j-1} - k2 c_{j-2},
  // normalized by r_lo^p. y' = r du/dr.
  long double y = 0.0L, dy = 0.0L;
  {
    long double c_prev2 = 0.0L, c_prev = 1.0L, rj = 1.0L;
    y = 1.0L;
    dy = p;
    for (int j = 1; j < 200; ++j) {
      const long double c = (-2.0L * e * alpha * c_prev - k2 * c_prev2) /
                            ((p + j) * (p + j - 1.0L) + centrifugal);
      rj *= r_lo;
      y += c * rj;
      dy += (p + j) * c * rj;
      c_prev2 = c_prev;
      c_prev = c;
      if (std::fabs(c * rj) < 1e-22L * std::fabs(y)) break;
    }
  }
  int nodes = 0;
  long double x = x0;
  for (int i = 0; i < steps; ++i) {
    long double a1, a2, a3, a4;
    rhs(x, y, dy, a1);
    const long double y2 = y + 0.5L * h * dy, dy2 = dy + 0.5L * h * a1;
    rhs(x + 0.5L * h, y2, dy2, a2);
    const long double y3 = y + 0.5L * h * dy2, dy3 = dy + 0.5L * h * a2;
    rhs(x + 0.5L * h, y3, dy3, a3);
    const long double y4 = y + h * dy3, dy4 = dy + h * a3;
    rhs(x + h, y4, dy4, a4);
    const long double yn = y + h / 6.0L * (dy + 2.0L * dy2 + 2.0L * dy3 + dy4);
    const long double dyn = dy + h / 6.0L * (a1 + 2.0L * a2 + 2.0L * a3 + a4);
    if ((yn < 0.0L) != (y < 0.0L)) ++nodes;
    y = yn;
    dy = dyn;
    x += h;
    // Rescale to avoid overflow in the classically forbidden tail.
    const long double m = std::fabs(y) + std::fabs(dy);
    if (m > 1e300L) {
      y /= m;
      dy /= m;
    }
  }
  return nodes;
}

inline ShootingResult shooting_energy(int n, int l, long double alpha, int steps = 60000) {
  const long double big_n = n + l + 1;
  const long double scale = big_n / alpha;
  const long double r_lo = 1e-3L * scale, r_hi = 40.0L * scale;
  // Bracket: far below the level, and just under the continuum.
  const long double bind_nr = alpha * alpha / (2.0L * big_n * big_n);
  long double lo = 1.0L - 4.0L * bind_nr;
  long double hi = 1.0L - 0.25L * bind_nr * big_n * big_n / ((big_n + 1) * (big_n + 1));
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (count_nodes(mid, l, alpha, r_lo, r_hi, steps) > n)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-18L) break;
  }
  return {0.5L * (lo + hi), count_nodes(lo, l, alpha, r_lo, r_hi, steps)};
}

}  // namespace oracle

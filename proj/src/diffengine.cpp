#include "kgconf/diffengine.hpp"

#include <cmath>
#include <vector>

namespace kgconf {

namespace {

constexpr std::array<int, 4> kOffsets{-2, -1, 1, 2};
constexpr std::array<double, 4> kFirstWeights{1.0, -8.0, 8.0, -1.0};

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::x1: return "x1";
    case Axis::x2: return "x2";
    case Axis::x3: return "x3";
    case Axis::t: return "t";
  }
  return "?";
}

void check_finite(cplx v, const ComplexField& f, const SpaceTimePoint& p) {
  if (!finite(v))
    throw NonFiniteError("non-finite sample of field '" + f.label() +
                         "' near r = " + std::to_string(radial_norm(p.x)));
}

void require_off_locus(const ComplexField& f, const SpaceTimePoint& p) {
  if (f.singular_at_origin() && radial_norm(p.x) == 0.0)
    throw DomainError("field '" + f.label() + "' is singular at r = 0");
}

int spatial_axes(Partial which) {
  int n = is_spatial(which.first) ? 1 : 0;
  if (which.second && is_spatial(*which.second) &&
      !(*which.second == which.first))
    ++n;
  return n;
}

// Upper bound on |offset| / h over all stencil samples.
double reach_factor(Partial which, const DiffConfig& cfg) {
  const int levels = cfg.richardson_levels < 1 ? 1 : cfg.richardson_levels;
  const double f = std::ldexp(2.0, levels);
  return spatial_axes(which) == 2 ? f * std::sqrt(2.0) : f;
}

// Steps along the requested axes, shrunk so no sample comes closer to the
// origin than half the current radius.
std::array<double, 2> effective_steps(const ComplexField& f,
                                      const SpaceTimePoint& p, Partial which,
                                      const DiffConfig& cfg) {
  const Axis second = which.second.value_or(which.first);
  std::array<double, 2> h{cfg.step(which.first), cfg.step(second)};
  if (!f.singular_at_origin() || spatial_axes(which) == 0) return h;
  const double r = radial_norm(p.x);
  if (r == 0.0)
    throw DomainError("stencil for field '" + f.label() +
                      "' centred on the singular point r = 0");
  const double limit = 0.5 * r / reach_factor(which, cfg);
  for (int k = 0; k < 2; ++k) {
    const Axis a = k == 0 ? which.first : second;
    if (is_spatial(a) && h[k] > limit) h[k] = limit;
  }
  return h;
}

SpaceTimePoint shifted(SpaceTimePoint p, Axis a, double delta) {
  if (a == Axis::t)
    p.t += delta;
  else
    p.x[static_cast<int>(a)] += delta;
  return p;
}

cplx sample(const ComplexField& f, const SpaceTimePoint& p) {
  const cplx v = f(p);
  check_finite(v, f, p);
  return v;
}

cplx first_difference(const ComplexField& f, const SpaceTimePoint& p, Axis a,
                      double h) {
  cplx sum{};
  for (int k = 0; k < 4; ++k)
    sum += kFirstWeights[k] * sample(f, shifted(p, a, kOffsets[k] * h));
  return sum / (12.0 * h);
}

cplx second_difference(const ComplexField& f, const SpaceTimePoint& p, Axis a,
                       double h, cplx centre) {
  const cplx sum = -sample(f, shifted(p, a, 2 * h)) +
                   16.0 * sample(f, shifted(p, a, h)) - 30.0 * centre +
                   16.0 * sample(f, shifted(p, a, -h)) -
                   sample(f, shifted(p, a, -2 * h));
  return sum / (12.0 * h * h);
}

cplx mixed_difference(const ComplexField& f, const SpaceTimePoint& p, Axis a,
                      Axis b, double ha, double hb) {
  cplx sum{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto q = shifted(shifted(p, a, kOffsets[i] * ha), b, kOffsets[j] * hb);
      sum += kFirstWeights[i] * kFirstWeights[j] * sample(f, q);
    }
  return sum / (144.0 * ha * hb);
}

Estimate stencil_derivative(const ComplexField& f, const SpaceTimePoint& p,
                            Partial which, const DiffConfig& cfg) {
  const auto h = effective_steps(f, p, which, cfg);
  const bool pure_second = which.second && *which.second == which.first;
  const cplx centre = pure_second ? sample(f, p) : cplx{};

  auto raw = [&](double scale) {
    if (!which.second)
      return first_difference(f, p, which.first, h[0] * scale);
    if (pure_second)
      return second_difference(f, p, which.first, h[0] * scale, centre);
    return mixed_difference(f, p, which.first, *which.second, h[0] * scale,
                            h[1] * scale);
  };

  const int levels = cfg.richardson_levels;
  if (levels == 0) {
    const cplx fine = raw(1.0);
    return {fine, std::abs(fine - raw(2.0))};
  }

  // table[k][j]: row k uses step h * 2^(levels - k); column j has had j
  // Richardson eliminations of the h^4, h^6, ... error terms.
  std::vector<std::vector<cplx>> table(levels + 1);
  for (int k = 0; k <= levels; ++k) {
    table[k].resize(k + 1);
    table[k][0] = raw(std::ldexp(1.0, levels - k));
    for (int j = 1; j <= k; ++j) {
      const double factor = std::ldexp(1.0, 2 * j + 2) - 1.0;
      table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / factor;
    }
  }
  const cplx best = table[levels][levels];
  return {best, std::abs(best - table[levels][levels - 1])};
}

Estimate exact_derivative(const ComplexField& f, const SpaceTimePoint& p,
                          Partial which) {
  require_off_locus(f, p);
  Coords<Jet> x{Jet(p.x[0]), Jet(p.x[1]), Jet(p.x[2])};
  Jet t(p.t);
  auto slot = [&](Axis a) -> Jet& {
    return a == Axis::t ? t : x[static_cast<int>(a)];
  };
  slot(which.first).d1 = 1.0;
  if (which.second) slot(*which.second).d2 = 1.0;
  const Jet out = f.jet(x, t);
  const cplx v = which.second ? out.d12 : out.d1;
  check_finite(v, f, p);
  return {v, 0.0};
}

}  // namespace

std::string to_string(const Partial& p) {
  if (!p.second) return "d/d" + axis_name(p.first);
  if (*p.second == p.first) return "d2/d" + axis_name(p.first) + "2";
  return "d2/d" + axis_name(p.first) + "d" + axis_name(*p.second);
}

std::string_view to_string(DiffMode mode) {
  return mode == DiffMode::exact ? "exact-forward" : "stencil";
}

DiffMode parse_diff_mode(std::string_view text) {
  if (text == "exact" || text == "exact-forward") return DiffMode::exact;
  if (text == "stencil") return DiffMode::stencil;
  throw ConfigError("unknown differentiation mode '" + std::string(text) + "'");
}

void DiffConfig::validate() const {
  if (!(base_step > 0.0) || !std::isfinite(base_step))
    throw ConfigError("base_step must be positive");
  if (richardson_levels < 0 || richardson_levels > 4)
    throw ConfigError("richardson_levels must lie in [0, 4]");
  if (axis_steps)
    for (double h : *axis_steps)
      if (!(h > 0.0) || !std::isfinite(h))
        throw ConfigError("per-axis steps must be positive");
}

Estimate differentiate_with_error(const DerivativeRequest& req,
                                  const DiffConfig& cfg) {
  if (req.field == nullptr) throw ConfigError("derivative request without field");
  if (cfg.mode == DiffMode::exact)
    return exact_derivative(*req.field, req.point, req.which);
  return stencil_derivative(*req.field, req.point, req.which, cfg);
}

double stencil_reach(const ComplexField& f, const SpaceTimePoint& p,
                     Partial which, const DiffConfig& cfg) {
  if (spatial_axes(which) == 0) return 0.0;
  const auto h = effective_steps(f, p, which, cfg);
  const Axis second = which.second.value_or(which.first);
  const double hs = std::max(is_spatial(which.first) ? h[0] : 0.0,
                             is_spatial(second) ? h[1] : 0.0);
  return reach_factor(which, cfg) * hs;
}

}  // namespace kgconf

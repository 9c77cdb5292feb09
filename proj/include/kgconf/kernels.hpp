#pragma once

// Grid reductions. The OpenMP kernel and the serial reference produce
// bit-identical results: the only reduction is max, which is exact and
// order-independent.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <span>
#include <string_view>

#include "kgconf/core.hpp"

namespace kgconf {

enum class Execution { serial, parallel };

std::string_view to_string(Execution e);

/// Per-point contribution: |LHS - RHS|, |psi| and the propagated error bound.
struct PointSample {
  double residual = 0.0;
  double magnitude = 0.0;
  double error = 0.0;
};

struct GridMaxima {
  double residual = 0.0;
  double magnitude = 0.0;
  double error = 0.0;
  std::size_t points = 0;

  void absorb(const PointSample& s) {
    residual = std::max(residual, s.residual);
    magnitude = std::max(magnitude, s.magnitude);
    error = std::max(error, s.error);
    ++points;
  }
  void merge(const GridMaxima& o) {
    residual = std::max(residual, o.residual);
    magnitude = std::max(magnitude, o.magnitude);
    error = std::max(error, o.error);
    points += o.points;
  }

  /// Scaled residual |LHS - RHS| / (scale * max|psi|).
  double scaled_residual(double scale) const {
    const double denom = scale * magnitude;
    return denom > 0.0 ? residual / denom : residual;
  }
  double scaled_error(double scale) const {
    const double denom = scale * magnitude;
    return denom > 0.0 ? error / denom : error;
  }
};

template <class Item, class F>
GridMaxima reduce_serial(std::span<const Item> items, F&& kernel) {
  GridMaxima out;
  for (const auto& item : items) out.absorb(kernel(item));
  return out;
}

template <class Item, class F>
GridMaxima reduce_parallel(std::span<const Item> items, F&& kernel) {
  GridMaxima out;
  std::exception_ptr failure;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel
  {
    GridMaxima local;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        local.absorb(kernel(items[i]));
      } catch (...) {
#pragma omp critical(kgconf_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(kgconf_merge)
    out.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <class Item, class F>
GridMaxima reduce(std::span<const Item> items, F&& kernel, Execution exec) {
  return exec == Execution::serial ? reduce_serial(items, kernel)
                                   : reduce_parallel(items, kernel);
}

}  // namespace kgconf

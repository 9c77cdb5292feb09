#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kgconf/diffengine.hpp"

namespace kgconf {

struct CaseResult {
  std::string name;
  double max_residual = 0.0;
  double error_estimate = 0.0;
  double tolerance = 0.0;
  // Mandatory-fail probes: a healthy suite reports these as not passing.
  bool probe = false;

  bool pass() const { return max_residual <= tolerance; }
  bool behaved() const { return probe ? !pass() : pass(); }
};

struct ResidualReport {
  std::string suite;
  DiffMode mode = DiffMode::exact;
  std::vector<CaseResult> cases;
  double wall_ms = 0.0;

  void add(CaseResult c) { cases.push_back(std::move(c)); }

  void merge(const ResidualReport& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  }

  /// Every ordinary case passes and every probe fails. A suite without a
  /// probe cannot pass.
  bool pass() const {
    bool has_probe = false;
    for (const auto& c : cases) {
      if (!c.behaved()) return false;
      has_probe = has_probe || c.probe;
    }
    return has_probe;
  }

  double max_residual() const {
    double m = 0.0;
    for (const auto& c : cases)
      if (!c.probe) m = std::max(m, c.max_residual);
    return m;
  }

  const CaseResult* find(const std::string& name) const {
    for (const auto& c : cases)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline double default_tolerance(DiffMode mode) {
  return mode == DiffMode::exact ? 1e-10 : 1e-8;
}

}  // namespace kgconf

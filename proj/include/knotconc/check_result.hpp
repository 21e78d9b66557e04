#pragma once

#include <string>

namespace knotconc {

/// Outcome of an identity check: whether it holds, plus a human-readable report
/// (first discrepancy when it does not).
struct CheckResult {
  bool holds = false;
  std::string report;

  explicit operator bool() const { return holds; }
};

}  // namespace knotconc

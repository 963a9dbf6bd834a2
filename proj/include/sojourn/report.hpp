#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sojourn/qr2.hpp"

namespace sojourn {

/// One coefficient that failed to agree: z^n t^k of the named quantity.
struct Mismatch {
  int n = 0;
  int k = 0;
  std::string which;
  std::string expected;
  std::string actual;
};

/// Outcome of an exact cross-check. Keeps every mismatch in discovery order.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }

  void expect_equal(int n, int k, const std::string& which, const Qr2& expected, const Qr2& actual) {
    ++checked;
    if (expected != actual) mismatches.push_back({n, k, which, expected.to_string(), actual.to_string()});
  }

  void merge(const CheckReport& other) {
    checked += other.checked;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  }

  /// "name: ok (N coefficients)" or the first offending coefficient.
  std::string summary() const;
};

}  // namespace sojourn

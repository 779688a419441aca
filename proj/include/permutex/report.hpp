#pragma once

// Outcome of an empirical verification scan.

#include <cstddef>
#include <string>
#include <vector>

namespace permutex {

struct VerifyReport {
  std::string statement;                // which statement was scanned
  std::size_t scanned = 0;              // instances checked
  std::vector<std::string> violations;  // empty on success
  bool ok() const { return violations.empty(); }
};

}  // namespace permutex

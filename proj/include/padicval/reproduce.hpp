#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "padicval/analysis.hpp"

namespace padicval {

struct Claim {
  std::string example;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReproduceOptions {
  std::size_t scan_count = 5000;  ///< primes scanned for the non-Hensel set
  unsigned depth_cap = kDefaultDepthCap;
};

/// Recomputes the worked examples. `selector` is one of example1, example2,
/// example3, example4, legendre or all; anything else throws std::invalid_argument.
std::vector<Claim> reproduce(std::string_view selector, const ReproduceOptions& opts = {});

}  // namespace padicval

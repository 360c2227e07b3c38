#pragma once

// Single-threaded versions of the OpenMP kernels. Kept as the reference the
// parallel paths are tested and benchmarked against.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padicval/analysis.hpp"
#include "padicval/recurrence.hpp"

namespace padicval::reference {

std::vector<std::uint64_t> term_valuations(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max);

std::uint64_t valuation_tn_direct(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n);

std::vector<ScanEntry> scan_primes(const IntPolynomial& q, std::size_t count, RootOptions opts = {});

}  // namespace padicval::reference

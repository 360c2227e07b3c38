#pragma once

#include <cstdint>
#include <vector>

#include "padicval/padic.hpp"
#include "padicval/poly.hpp"

namespace padicval {

/// t_n = Q(n0 + n) * t_{n-1}, t_0 = 1. Index n counts steps after n0, so the
/// multipliers are Q(n0 + 1), ..., Q(n0 + n). Q has no root in {n0 + 1, ...}.
struct RecurrenceSpec {
  IntPolynomial q;
  std::uint64_t n0 = 0;
};

/// With auto_shift, n0 is the largest nonnegative integer root of Q (0 if
/// none). Without it n0 = 0 and a positive integer root throws HasIntegerRoot.
/// The zero polynomial throws std::invalid_argument.
RecurrenceSpec make_spec(IntPolynomial q, bool auto_shift = false);

/// Oracle: sum of nu_p(Q(i)) over the window, one exact evaluation per term.
std::uint64_t valuation_tn_direct(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n);

/// Same value from lifted roots: for each root b_j of Q mod p, the sum over
/// s >= 1 of #{i in window : i = gamma_{j,s-1} mod p^s}. Requires a Hensel
/// prime (or one with no roots); otherwise throws NotHenselPrime.
std::uint64_t valuation_tn_fast(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n);

/// #{i : lo < i <= lo + n, i = r mod m}.
BigInt count_congruent(const BigInt& n, const BigInt& r, const BigInt& m, const BigInt& lo);
std::uint64_t count_congruent(std::uint64_t n, std::uint64_t r, std::uint64_t m, std::uint64_t lo);

/// nu_p(Q(n0 + i)) for i = 1..n_max. OpenMP-parallel over i.
std::vector<std::uint64_t> term_valuations(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max);

struct ValuationSeries {
  Prime p;
  RecurrenceSpec spec;
  std::vector<std::uint64_t> values;  ///< values[n-1] = nu_p(t_n)
  std::uint64_t max_power = 0;        ///< r_n over the whole window

  std::uint64_t at(std::uint64_t n) const { return values.at(n - 1); }
};

ValuationSeries valuation_series(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max);

/// r_n: the largest nu_p(Q(i)) over the window of length n.
std::uint64_t max_power_index(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n);

}  // namespace padicval

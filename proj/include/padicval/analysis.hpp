#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "padicval/padic.hpp"
#include "padicval/rational.hpp"
#include "padicval/recurrence.hpp"

namespace padicval {

inline constexpr unsigned kDefaultDepthCap = 64;

/// z_p / (p - 1), the slope of nu_p(t_n) at a Hensel prime (0 with no roots).
/// Throws NotHenselPrime otherwise.
ExactRational predicted_slope_hensel(const IntPolynomial& q, const Prime& p);

/// E(Q, p) = lim nu_p(t_n) / n, exact, for any prime with Q != 0 mod p.
///
/// Q is first split into squarefree parts, Q = c * prod f_i^i, and
/// E(Q) = sum i * E(f_i). For each f_i every root b mod p is one residue
/// branch. A simple root contributes 1/(p-1). Otherwise R(y) = f(p*y + b) is
/// divided by p^m, m the least coefficient valuation, and the branch
/// contributes (m + E(R / p^m, p)) / p. A branch deeper than depth_cap (roots
/// agreeing in more than depth_cap base-p digits) throws DepthExceeded naming
/// the residue chain; ZeroModPrime when p divides every coefficient.
ExactRational exact_slope(const IntPolynomial& q, const Prime& p, unsigned depth_cap = kDefaultDepthCap);

/// N_p(Q) = (p - 1) * E(Q, p).
ExactRational asymptotic_zero_number(const IntPolynomial& q, const Prime& p, unsigned depth_cap = kDefaultDepthCap);

/// (p - 1) * nu_p(t_n) / n. Fast engine at Hensel primes, direct oracle otherwise.
ExactRational empirical_slope(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n);

struct ErrorSeries {
  Prime p;
  std::uint64_t z_p = 0;
  std::vector<BigInt> err;     ///< err[n-1] = z_p * n - (p - 1) * nu_p(t_n)
  std::vector<BigInt> relerr;  ///< relerr[n-1] = err[n-1] - err[n-2], err[-1] = 0
};

ErrorSeries error_series(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max);

struct ScanEntry {
  Prime p;
  /// Empty when Q = 0 mod p (every residue is a root).
  std::optional<PrimeClassification> classification;

  bool all_residues() const noexcept { return !classification.has_value(); }
  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

/// Classifies Q at each of the first `count` primes. Runs across primes in
/// parallel; the result is ordered by prime and identical to the serial scan.
std::vector<ScanEntry> scan_primes(const IntPolynomial& q, std::size_t count, RootOptions opts = {});

/// Per-n slope of nu_q(t_n(x^p + sign)): (2p - 1) / (p(p - 1)) when q == p
/// (p odd), gcd(p, q - 1) / (q - 1) otherwise.
ExactRational closed_form_slope_xp_pm1(const Prime& p, int sign, const Prime& q);

/// nu_p(x^p - 1) by the closed form: 0 unless x = 1 mod p, then 1 + nu_p(x - 1).
/// p odd, x != 1.
std::uint64_t nu_xp_minus_1(const BigInt& x, const Prime& p);
/// nu_p(x^p + 1): 0 unless x = -1 mod p, then 1 + nu_p(x + 1). p odd, x != -1.
std::uint64_t nu_xp_plus_1(const BigInt& x, const Prime& p);
/// nu_p(x^(p-1) + ... + x + 1): 1 if x = 1 mod p, else 0. p odd, x != 1.
std::uint64_t nu_Tp(const BigInt& x, const Prime& p);
/// nu_p(x^(p-1) - x^(p-2) + ... - x + 1): 1 if x = -1 mod p, else 0. p odd, x != -1.
std::uint64_t nu_Sp(const BigInt& x, const Prime& p);

/// Number of solutions of x^p + 1 = 0 mod q, i.e. gcd(p, q - 1).
std::uint64_t root_count_xp_plus_1(const Prime& p, const Prime& q);

struct Factor {
  IntPolynomial poly;
  unsigned multiplicity = 1;
};

/// Sum of multiplicity * E(factor, p). Finite even when the product has a
/// repeated factor, since each factor is resolved separately.
ExactRational composite_slope(std::span<const Factor> factors, const Prime& p, unsigned depth_cap = kDefaultDepthCap);

struct SlopeReport {
  Prime p;
  PrimeClassification classification;
  std::optional<ExactRational> predicted;  ///< per-n slope of nu_p(t_n)
  std::optional<ExactRational> n_p;        ///< asymptotic zero number
  std::vector<std::pair<std::uint64_t, ExactRational>> empirical;
};

/// Hensel prediction z_p / (p - 1), or exact_slope when `exact` is
/// set (errors propagate), plus empirical (p - 1) nu_p(t_n) / n at each checkpoint.
SlopeReport slope_report(const RecurrenceSpec& spec, const Prime& p, std::span<const std::uint64_t> checkpoints,
                         bool exact, unsigned depth_cap = kDefaultDepthCap);

}  // namespace padicval

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "padicval/poly.hpp"

namespace padicval {

/// Deterministic Miller-Rabin over the first thirteen prime bases, which is
/// exact for every n below 3.3e24 and hence for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// A prime number. Construction from a composite throws std::invalid_argument.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }
  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// The first `count` primes, ascending.
std::vector<Prime> first_primes(std::size_t count);

/// nu_p(x): exponent of p in x. Throws ValuationOfZero for x == 0.
std::uint64_t int_valuation(const BigInt& x, const Prime& p);

/// Sum of base-p digits of n >= 0.
std::uint64_t digit_sum(const BigInt& n, const Prime& p);

/// nu_p(n!) = (n - s_p(n)) / (p - 1).
std::uint64_t legendre_factorial_valuation(std::uint64_t n, const Prime& p);

enum class RootStrategy {
  automatic,  ///< scan below RootOptions::scan_threshold, gcd path above
  scan,       ///< evaluate Q at every residue
  gcd,        ///< gcd(Q mod p, x^p - x) followed by equal-degree splitting
};

struct RootOptions {
  RootStrategy strategy = RootStrategy::automatic;
  std::uint64_t scan_threshold = 4096;
};

/// Sorted residues b in [0, p-1] with Q(b) = 0 mod p.
/// Throws ZeroModPrime when every coefficient of Q is divisible by p.
std::vector<std::uint64_t> roots_mod_p(const IntPolynomial& q, const Prime& p, RootOptions opts = {});

enum class Verdict { no_roots, hensel, non_hensel };

std::string_view to_string(Verdict v);

struct PrimeClassification {
  Prime p;
  Verdict verdict;
  std::vector<std::uint64_t> roots;             ///< b_1 .. b_{z_p}
  std::vector<std::uint64_t> non_hensel_roots;  ///< roots with Q'(b) = 0 mod p

  std::size_t z_p() const noexcept { return roots.size(); }
  friend bool operator==(const PrimeClassification&, const PrimeClassification&) = default;
};

PrimeClassification classify_prime(const IntPolynomial& q, const Prime& p, RootOptions opts = {});

/// A root of Q in the p-adic integers, known to a finite number of base-p
/// digits. digits()[0] is the residue the root was lifted from.
class HenselRoot {
 public:
  HenselRoot(Prime p, std::vector<std::uint64_t> digits);

  const Prime& p() const noexcept { return p_; }
  std::uint64_t base_digit() const noexcept { return digits_.front(); }
  const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }
  std::size_t precision() const noexcept { return digits_.size(); }

  /// gamma_s = sum_{i <= s} digit_i * p^i, in [0, p^(s+1) - 1].
  /// Throws std::out_of_range when s >= precision().
  BigInt truncation_value(std::size_t s) const;

  friend bool operator==(const HenselRoot&, const HenselRoot&) = default;

 private:
  Prime p_;
  std::vector<std::uint64_t> digits_;
};

/// Extends a simple root of Q mod p one base-p digit at a time.
///
/// The digit at level s solves
///   beta_s = -(Q(gamma_{s-1}) / p^s) * Q'(beta_0)^{-1}  (mod p),
/// with the inverse of Q'(beta_0) computed once at construction.
class HenselLifter {
 public:
  /// Throws NotARoot if Q(a) != 0 mod p, NotSimple if Q'(a) = 0 mod p.
  HenselLifter(const IntPolynomial& q, const Prime& p, std::uint64_t a);

  /// Appends the next digit.
  void extend();

  std::size_t precision() const noexcept { return digits_.size(); }
  /// Current truncation gamma_{precision-1}.
  const BigInt& gamma() const noexcept { return gamma_; }
  /// p^precision.
  const BigInt& modulus() const noexcept { return modulus_; }
  HenselRoot root() const { return HenselRoot(p_, digits_); }

 private:
  IntPolynomial q_;
  Prime p_;
  std::uint64_t inv_derivative_;
  std::vector<std::uint64_t> digits_;
  BigInt gamma_;
  BigInt modulus_;
};

/// The root through residue a with k + 1 digits (gamma_k determined mod p^(k+1)).
HenselRoot hensel_lift(const IntPolynomial& q, const Prime& p, std::uint64_t a, std::size_t k);

}  // namespace padicval

#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's valuation, root-finding or lifting code.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "padicval/poly.hpp"

namespace oracle {

using padicval::BigInt;
using padicval::IntPolynomial;

inline BigInt eval(const IntPolynomial& q, const BigInt& x) {
  // Power sum rather than Horner, to differ from the library path.
  BigInt sum = 0, power = 1;
  for (const auto& c : q.coeffs()) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

inline std::uint64_t valuation(BigInt x, std::uint64_t p) {
  std::uint64_t e = 0;
  const BigInt pz(static_cast<unsigned long>(p));
  if (x < 0) x = -x;
  while (x != 0 && x % pz == 0) {
    x /= pz;
    ++e;
  }
  return e;
}

/// nu_p of the actual product t_n = prod Q(n0 + i). Only for small n.
inline std::uint64_t product_valuation(const IntPolynomial& q, std::uint64_t n0, std::uint64_t n, std::uint64_t p) {
  BigInt t = 1;
  for (std::uint64_t i = 1; i <= n; ++i) t *= eval(q, BigInt(static_cast<unsigned long>(n0 + i)));
  return valuation(t, p);
}

inline std::vector<std::uint64_t> roots(const IntPolynomial& q, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  const BigInt pz(static_cast<unsigned long>(p));
  for (std::uint64_t b = 0; b < p; ++b) {
    BigInt v = eval(q, BigInt(static_cast<unsigned long>(b)));
    if (v % pz == 0) out.push_back(b);
  }
  return out;
}

/// Every r in [0, p^(k+1)) with r = a mod p and Q(r) = 0 mod p^(k+1).
inline std::vector<BigInt> lifts(const IntPolynomial& q, std::uint64_t p, std::uint64_t a, unsigned k) {
  BigInt mod = 1;
  for (unsigned i = 0; i <= k; ++i) mod *= static_cast<unsigned long>(p);
  std::vector<BigInt> out;
  for (BigInt r = a; r < mod; r += static_cast<unsigned long>(p)) {
    BigInt v = eval(q, r) % mod;
    if (v == 0) out.push_back(r);
  }
  return out;
}

inline std::uint64_t legendre_floor_sum(std::uint64_t n, std::uint64_t p) {
  std::uint64_t sum = 0;
  for (std::uint64_t pk = p; pk <= n; pk *= p) {
    sum += n / pk;
    if (pk > n / p) break;
  }
  return sum;
}

inline std::uint64_t factorial_valuation(unsigned long n, std::uint64_t p) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return valuation(f, p);
}

inline std::uint64_t digit_sum_via_string(const BigInt& n, int base) {
  std::uint64_t s = 0;
  for (char ch : n.get_str(base)) s += static_cast<std::uint64_t>(ch >= 'a' ? ch - 'a' + 10 : ch - '0');
  return s;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long max_coeff, bool nonzero_lead = true) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-max_coeff, max_coeff);
  const int d = deg(rng);
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coef(rng);
  while (nonzero_lead && c.back() == 0) c.back() = coef(rng);
  return IntPolynomial(std::move(c));
}

inline std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace oracle

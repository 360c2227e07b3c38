#pragma once

// Dense univariate polynomials over Z/pZ, p prime below 2^64. Internal to the
// root finder; coefficient vectors are ascending and trimmed.

#include <cstdint>
#include <vector>

#include "padicval/poly.hpp"

namespace padicval::fp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

void trim(Poly& f);
int degree(const Poly& f);
Poly reduce(const IntPolynomial& q, std::uint64_t p);
Poly make_monic(Poly f, std::uint64_t p);
Poly sub(Poly a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero f.
Poly rem(Poly a, const Poly& f, std::uint64_t p);
/// Quotient of a by a nonzero f (remainder discarded).
Poly quot(Poly a, const Poly& f, std::uint64_t p);
/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// base^e mod f.
Poly pow_mod_poly(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t p);

/// Roots of a monic squarefree g that splits into distinct linear factors.
std::vector<std::uint64_t> split_linear(const Poly& g, std::uint64_t p);

}  // namespace padicval::fp

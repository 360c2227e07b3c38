#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padicval {

using BigInt = mpz_class;

/// Polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending order (index i holds the coefficient
/// of x^i) and kept trimmed: the highest stored coefficient is nonzero, and
/// the zero polynomial is the empty sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// Ascending coefficients, e.g. {3, 0, 0, 2, 0, 1} is x^5 + 2x^3 + 3.
  static IntPolynomial from_ascending(std::initializer_list<long> coeffs);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t k);
  static IntPolynomial x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  /// Leading coefficient (zero for the zero polynomial).
  BigInt leading() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  IntPolynomial pow(unsigned e) const;

  /// Canonical text form, descending degree: "x^5+2*x^3+3", "-x+1", "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

BigInt evaluate(const IntPolynomial& q, const BigInt& x);

/// Q(x) mod m in [0, m-1], all intermediate products reduced mod m.
/// Throws std::invalid_argument when m < 2.
std::uint64_t evaluate_mod(const IntPolynomial& q, std::uint64_t x, std::uint64_t m);
BigInt evaluate_mod(const IntPolynomial& q, const BigInt& x, const BigInt& m);

IntPolynomial derivative(const IntPolynomial& q);

/// R with R(k) = Q(a*k + b).
IntPolynomial affine_substitute(const IntPolynomial& q, const BigInt& a, const BigInt& b);

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInt content(const IntPolynomial& q);

/// Q / content(Q), sign-normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& q);

/// Divides every coefficient by c. Throws std::invalid_argument unless exact.
IntPolynomial divide_exact(const IntPolynomial& q, const BigInt& c);

/// lc(B)^(deg A - deg B + 1) * A mod B. B must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// The integer polynomial q with A = B*q, if one exists.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd in Z[x] with positive leading coefficient, via the primitive
/// pseudo-remainder sequence. Throws std::invalid_argument if both are zero.
IntPolynomial integer_poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Q = c * prod f_i^i with each f_i primitive, squarefree and pairwise
/// coprime. Returns the (f_i, i) with deg f_i >= 1, ascending in i.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& q);

/// Sorted roots of Q in {0, 1, 2, ...}. Throws std::invalid_argument for the
/// zero polynomial.
std::vector<BigInt> nonneg_integer_roots(const IntPolynomial& q);

}  // namespace padicval

#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace padicval {

/// Exact fraction in lowest terms with a positive denominator.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const mpz_class& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const mpz_class& num, const mpz_class& den);

  /// Parses "num/den" or a bare integer. Throws std::invalid_argument.
  static ExactRational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Always "num/den", including "3/1"; used by CSV and JSON.
  std::string serialize() const;
  /// "57/29", or "3" for integers.
  std::string to_string() const;

  ExactRational& operator+=(const ExactRational& o) { value_ += o.value_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { value_ -= o.value_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { value_ *= o.value_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(0) - a; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend ExactRational abs(const ExactRational& a) { return a < ExactRational(0) ? -a : a; }

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

}  // namespace padicval

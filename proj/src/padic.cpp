#include "padicval/padic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "fp_poly.hpp"
#include "padicval/errors.hpp"

namespace padicval {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (std::uint64_t b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t b : kBases) {
    std::uint64_t x = fp::pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = fp::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) throw std::invalid_argument(std::to_string(value) + " is not prime");
}

std::vector<Prime> first_primes(std::size_t count) {
  std::vector<Prime> out;
  if (count == 0) return out;
  out.reserve(count);
  const double n = static_cast<double>(count);
  std::size_t limit = count < 6 ? 15 : static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 1;
  std::vector<bool> composite(limit + 1, false);
  for (std::size_t i = 2; i <= limit && out.size() < count; ++i) {
    if (composite[i]) continue;
    out.emplace_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t int_valuation(const BigInt& x, const Prime& p) {
  if (x == 0) throw ValuationOfZero();
  BigInt rest;
  const BigInt pz(static_cast<unsigned long>(p.value()));
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

std::uint64_t digit_sum(const BigInt& n, const Prime& p) {
  if (n < 0) throw std::invalid_argument("digit_sum: n must be nonnegative");
  BigInt rest = n;
  std::uint64_t sum = 0;
  while (rest != 0) sum += mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p.value());
  return sum;
}

std::uint64_t legendre_factorial_valuation(std::uint64_t n, const Prime& p) {
  const BigInt nz(static_cast<unsigned long>(n));
  return (n - digit_sum(nz, p)) / (p.value() - 1);
}

namespace {

std::vector<std::uint64_t> roots_by_scan(const fp::Poly& f, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < p; ++b) {
    std::uint64_t acc = 0;
    for (std::size_t k = f.size(); k-- > 0;) {
      acc = fp::mul_mod(acc, b, p) + f[k];
      if (acc >= p) acc -= p;
    }
    if (acc == 0) out.push_back(b);
  }
  return out;
}

std::vector<std::uint64_t> roots_by_gcd(const fp::Poly& f, std::uint64_t p) {
  const fp::Poly monic = fp::make_monic(f, p);
  // x^p - x mod f, then g = gcd(f, x^p - x) is the product of (x - b) over roots b.
  fp::Poly xp = fp::pow_mod_poly(fp::Poly{0, 1}, p, monic, p);
  xp = fp::sub(std::move(xp), fp::Poly{0, 1}, p);
  const fp::Poly g = fp::gcd(monic, xp, p);
  return fp::split_linear(g, p);
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const IntPolynomial& q, const Prime& p, RootOptions opts) {
  const fp::Poly f = fp::reduce(q, p);
  if (f.empty())
    throw ZeroModPrime("Q = " + q.to_string() + " vanishes identically mod " + std::to_string(p.value()) +
                       ": every residue is a root");
  if (f.size() == 1) return {};
  bool scan = false;
  switch (opts.strategy) {
    case RootStrategy::scan: scan = true; break;
    case RootStrategy::gcd: scan = false; break;
    case RootStrategy::automatic: scan = p.value() < opts.scan_threshold; break;
  }
  return scan ? roots_by_scan(f, p) : roots_by_gcd(f, p);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::no_roots: return "no_roots";
    case Verdict::hensel: return "hensel";
    case Verdict::non_hensel: return "non_hensel";
  }
  return "unknown";
}

PrimeClassification classify_prime(const IntPolynomial& q, const Prime& p, RootOptions opts) {
  PrimeClassification out{p, Verdict::no_roots, roots_mod_p(q, p, opts), {}};
  if (out.roots.empty()) return out;
  const IntPolynomial dq = derivative(q);
  for (std::uint64_t b : out.roots)
    if (evaluate_mod(dq, b, p.value()) == 0) out.non_hensel_roots.push_back(b);
  out.verdict = out.non_hensel_roots.empty() ? Verdict::hensel : Verdict::non_hensel;
  return out;
}

HenselRoot::HenselRoot(Prime p, std::vector<std::uint64_t> digits) : p_(p), digits_(std::move(digits)) {
  if (digits_.empty()) throw std::invalid_argument("HenselRoot: at least one digit required");
  for (auto d : digits_)
    if (d >= p_.value()) throw std::invalid_argument("HenselRoot: digit out of range");
}

BigInt HenselRoot::truncation_value(std::size_t s) const {
  if (s >= digits_.size())
    throw std::out_of_range("truncation index " + std::to_string(s) + " beyond precision " +
                            std::to_string(digits_.size()));
  BigInt acc = 0;
  const BigInt pz(static_cast<unsigned long>(p_.value()));
  for (std::size_t i = s + 1; i-- > 0;) {
    acc *= pz;
    acc += static_cast<unsigned long>(digits_[i]);
  }
  return acc;
}

HenselLifter::HenselLifter(const IntPolynomial& q, const Prime& p, std::uint64_t a) : q_(q), p_(p) {
  const std::uint64_t pv = p.value();
  const std::uint64_t base = a % pv;
  if (fp::reduce(q, pv).empty())
    throw ZeroModPrime("Q vanishes identically mod " + std::to_string(pv));
  if (evaluate_mod(q, base, pv) != 0)
    throw NotARoot(std::to_string(base) + " is not a root of " + q.to_string() + " mod " + std::to_string(pv));
  const std::uint64_t d = evaluate_mod(derivative(q), base, pv);
  if (d == 0)
    throw NotSimple("Q'(" + std::to_string(base) + ") = 0 mod " + std::to_string(pv) +
                    ": Hensel hypothesis fails, root cannot be lifted uniquely");
  inv_derivative_ = fp::inv_mod(d, pv);
  digits_.push_back(base);
  gamma_ = static_cast<unsigned long>(base);
  modulus_ = static_cast<unsigned long>(pv);
}

void HenselLifter::extend() {
  const std::uint64_t pv = p_.value();
  const BigInt next_mod = modulus_ * static_cast<unsigned long>(pv);
  // Q(gamma) = 0 mod p^s, so (Q(gamma) mod p^(s+1)) / p^s is a residue mod p.
  BigInt r = evaluate_mod(q_, gamma_, next_mod);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), modulus_.get_mpz_t());
  const std::uint64_t c = mpz_get_ui(r.get_mpz_t());
  const std::uint64_t t = fp::mul_mod(c, inv_derivative_, pv);
  const std::uint64_t digit = t == 0 ? 0 : pv - t;
  digits_.push_back(digit);
  gamma_ += modulus_ * static_cast<unsigned long>(digit);
  modulus_ = next_mod;
}

HenselRoot hensel_lift(const IntPolynomial& q, const Prime& p, std::uint64_t a, std::size_t k) {
  HenselLifter lifter(q, p, a);
  for (std::size_t i = 0; i < k; ++i) lifter.extend();
  return lifter.root();
}

}  // namespace padicval

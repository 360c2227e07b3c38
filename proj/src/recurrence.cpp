#include "padicval/recurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "padicval/errors.hpp"
#include "padicval/reference.hpp"

namespace padicval {

RecurrenceSpec make_spec(IntPolynomial q, bool auto_shift) {
  if (q.is_zero()) throw std::invalid_argument("recurrence multiplier must be a nonzero polynomial");
  const auto roots = nonneg_integer_roots(q);
  RecurrenceSpec spec{std::move(q), 0};
  if (roots.empty() || roots.back() == 0) return spec;
  if (!auto_shift)
    throw HasIntegerRoot("Q = " + spec.q.to_string() + " vanishes at the positive integer " + roots.back().get_str() +
                         ", so t_n = 0 from there on; start the recurrence past it (auto-shift)");
  if (!roots.back().fits_ulong_p()) throw std::invalid_argument("integer root too large for a start index");
  spec.n0 = roots.back().get_ui();
  return spec;
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Evaluates nu_p(Q(i)) for i up to a fixed window end. Uses 128-bit Horner
// when sum |c_k| * end^k < 2^126 certifies that no intermediate overflows,
// arbitrary precision otherwise.
class TermEvaluator {
 public:
  TermEvaluator(const IntPolynomial& q, const Prime& p, std::uint64_t window_end) : q_(q), p_(p) {
    const BigInt end(static_cast<unsigned long>(window_end));
    BigInt bound = 0, power = 1;
    for (const auto& c : q.coeffs()) {
      bound += abs(c) * power;
      power *= end;
    }
    BigInt limit = 1;
    limit <<= 126;
    narrow_ = bound < limit;
    if (narrow_) {
      for (const auto& c : q.coeffs()) {
        // |c| < 2^126, split into two 63-bit halves.
        BigInt mag = abs(c);
        BigInt hi = mag >> 63;
        BigInt lo = mag - (hi << 63);
        i128 v = (static_cast<i128>(hi.get_ui()) << 63) + static_cast<i128>(lo.get_ui());
        coeffs_.push_back(c < 0 ? -v : v);
      }
    }
  }

  std::uint64_t operator()(std::uint64_t i) const {
    if (!narrow_) return int_valuation(evaluate(q_, BigInt(static_cast<unsigned long>(i))), p_);
    i128 acc = 0;
    const i128 x = static_cast<i128>(i);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    if (acc == 0) throw ValuationOfZero();
    u128 u = acc < 0 ? static_cast<u128>(-acc) : static_cast<u128>(acc);
    const u128 pv = p_.value();
    std::uint64_t e = 0;
    while (u % pv == 0) {
      u /= pv;
      ++e;
    }
    return e;
  }

 private:
  const IntPolynomial& q_;
  Prime p_;
  bool narrow_ = false;
  std::vector<i128> coeffs_;
};

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

}  // namespace

std::vector<std::uint64_t> term_valuations(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max) {
  require_positive(n_max, "n_max");
  const TermEvaluator eval(spec.q, p, spec.n0 + n_max);
  std::vector<std::uint64_t> out(n_max);
  const auto count = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = eval(spec.n0 + static_cast<std::uint64_t>(i) + 1);
  return out;
}

std::uint64_t valuation_tn_direct(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n) {
  require_positive(n, "n");
  const TermEvaluator eval(spec.q, p, spec.n0 + n);
  std::uint64_t sum = 0;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(+ : sum)
  for (std::int64_t i = 0; i < count; ++i) sum += eval(spec.n0 + static_cast<std::uint64_t>(i) + 1);
  return sum;
}

namespace reference {

std::vector<std::uint64_t> term_valuations(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max) {
  require_positive(n_max, "n_max");
  std::vector<std::uint64_t> out;
  out.reserve(n_max);
  for (std::uint64_t i = 1; i <= n_max; ++i)
    out.push_back(int_valuation(evaluate(spec.q, BigInt(static_cast<unsigned long>(spec.n0 + i))), p));
  return out;
}

std::uint64_t valuation_tn_direct(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n) {
  std::uint64_t sum = 0;
  for (auto v : reference::term_valuations(spec, p, n)) sum += v;
  return sum;
}

}  // namespace reference

BigInt count_congruent(const BigInt& n, const BigInt& r, const BigInt& m, const BigInt& lo) {
  if (m < 1) throw std::invalid_argument("count_congruent: modulus must be positive");
  if (r < 0 || r >= m) throw std::invalid_argument("count_congruent: residue out of range");
  if (n < 0) throw std::invalid_argument("count_congruent: negative length");
  BigInt a = lo + n - r, b = lo - r;
  mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  mpz_fdiv_q(b.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  return a - b;
}

std::uint64_t count_congruent(std::uint64_t n, std::uint64_t r, std::uint64_t m, std::uint64_t lo) {
  if (m < 1) throw std::invalid_argument("count_congruent: modulus must be positive");
  if (r >= m) throw std::invalid_argument("count_congruent: residue out of range");
  auto floor_div = [](i128 a, i128 d) {
    i128 q = a / d;
    if ((a % d != 0) && (a < 0)) --q;
    return q;
  };
  const i128 mm = m;
  const i128 hi = static_cast<i128>(lo) + n - r;
  const i128 low = static_cast<i128>(lo) - r;
  return static_cast<std::uint64_t>(floor_div(hi, mm) - floor_div(low, mm));
}

std::uint64_t valuation_tn_fast(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n) {
  require_positive(n, "n");
  const PrimeClassification cls = classify_prime(spec.q, p);
  if (cls.verdict == Verdict::non_hensel)
    throw NotHenselPrime(std::to_string(p.value()) + " is not a Hensel prime for " + spec.q.to_string() +
                         ": some root b has Q'(b) = 0 mod p");
  const BigInt len(static_cast<unsigned long>(n));
  const BigInt lo(static_cast<unsigned long>(spec.n0));
  BigInt total = 0;
  for (std::uint64_t b : cls.roots) {
    HenselLifter lifter(spec.q, p, b);
    // Level s counts i with p^s | (i - beta_j); nested classes, so the counts
    // are nonincreasing in s and the first zero ends the sum.
    for (;;) {
      BigInt c = count_congruent(len, lifter.gamma(), lifter.modulus(), lo);
      if (c == 0) break;
      total += c;
      lifter.extend();
    }
  }
  return total.get_ui();
}

ValuationSeries valuation_series(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max) {
  std::vector<std::uint64_t> terms = term_valuations(spec, p, n_max);
  ValuationSeries out{p, spec, std::move(terms), 0};
  std::uint64_t acc = 0;
  for (auto& v : out.values) {
    out.max_power = std::max(out.max_power, v);
    acc += v;
    v = acc;
  }
  return out;
}

std::uint64_t max_power_index(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n) {
  const auto terms = term_valuations(spec, p, n);
  return *std::max_element(terms.begin(), terms.end());
}

}  // namespace padicval

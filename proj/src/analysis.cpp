#include "padicval/analysis.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>

#include "padicval/errors.hpp"
#include "padicval/reference.hpp"

namespace padicval {

namespace {

ExactRational unit_fraction(std::uint64_t den) { return ExactRational(1, BigInt(static_cast<unsigned long>(den))); }

std::string chain_text(const std::vector<std::uint64_t>& chain, std::uint64_t p) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += " + ";
    out += std::to_string(chain[i]);
    if (i == 1) out += "*" + std::to_string(p);
    if (i > 1) out += "*" + std::to_string(p) + "^" + std::to_string(i);
  }
  return out;
}

ExactRational branch_slope(const IntPolynomial& q, const Prime& p, unsigned depth, unsigned cap,
                           std::vector<std::uint64_t>& chain) {
  const std::uint64_t pv = p.value();
  const IntPolynomial dq = derivative(q);
  const BigInt pz(static_cast<unsigned long>(pv));
  ExactRational sum = 0;
  for (std::uint64_t b : roots_mod_p(q, p)) {
    if (evaluate_mod(dq, b, pv) != 0) {
      sum += unit_fraction(pv - 1);
      continue;
    }
    chain.push_back(b);
    if (depth + 1 > cap)
      throw DepthExceeded("residue branch x = " + chain_text(chain, pv) + " (mod " + std::to_string(pv) + "^" +
                          std::to_string(chain.size()) + ") did not resolve within depth cap " + std::to_string(cap) +
                          ": two " + std::to_string(pv) + "-adic roots agree past that many digits");
    IntPolynomial r = affine_substitute(q, pz, BigInt(static_cast<unsigned long>(b)));
    std::uint64_t m = UINT64_MAX;
    for (const auto& c : r.coeffs())
      if (c != 0) m = std::min(m, int_valuation(c, p));
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), pz.get_mpz_t(), m);
    r = divide_exact(r, scale);
    sum += (ExactRational(BigInt(static_cast<unsigned long>(m))) + branch_slope(r, p, depth + 1, cap, chain)) /
           ExactRational(pz);
    chain.pop_back();
  }
  return sum;
}

void require_odd(const Prime& p, const char* what) {
  if (p.value() == 2) throw std::invalid_argument(std::string(what) + " requires an odd prime");
}

BigInt mod_p(const BigInt& x, const Prime& p) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p.value());
  return r;
}

}  // namespace

ExactRational predicted_slope_hensel(const IntPolynomial& q, const Prime& p) {
  const PrimeClassification cls = classify_prime(q, p);
  if (cls.verdict == Verdict::non_hensel)
    throw NotHenselPrime(std::to_string(p.value()) + " is not a Hensel prime for " + q.to_string() +
                         ": some root b has Q'(b) = 0 mod p");
  return ExactRational(BigInt(static_cast<unsigned long>(cls.z_p())), BigInt(static_cast<unsigned long>(p.value() - 1)));
}

ExactRational exact_slope(const IntPolynomial& q, const Prime& p, unsigned depth_cap) {
  if (depth_cap == 0) throw std::invalid_argument("depth cap must be positive");
  if (q.is_zero() || content(q) % static_cast<unsigned long>(p.value()) == 0)
    throw ZeroModPrime("Q = " + q.to_string() + " vanishes identically mod " + std::to_string(p.value()));
  // Distinct squarefree parts have no common p-adic root, so each branch
  // recursion terminates; the multiplicity scales the contribution.
  ExactRational sum = 0;
  for (const auto& [part, mult] : squarefree_decomposition(q)) {
    std::vector<std::uint64_t> chain;
    sum += ExactRational(BigInt(mult)) * branch_slope(part, p, 0, depth_cap, chain);
  }
  return sum;
}

ExactRational asymptotic_zero_number(const IntPolynomial& q, const Prime& p, unsigned depth_cap) {
  return exact_slope(q, p, depth_cap) * ExactRational(BigInt(static_cast<unsigned long>(p.value() - 1)));
}

ExactRational empirical_slope(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n) {
  const Verdict v = classify_prime(spec.q, p).verdict;
  const std::uint64_t val = v == Verdict::non_hensel ? valuation_tn_direct(spec, p, n) : valuation_tn_fast(spec, p, n);
  return ExactRational(BigInt(static_cast<unsigned long>(val)) * static_cast<unsigned long>(p.value() - 1),
                       BigInt(static_cast<unsigned long>(n)));
}

ErrorSeries error_series(const RecurrenceSpec& spec, const Prime& p, std::uint64_t n_max) {
  ErrorSeries out{p, classify_prime(spec.q, p).z_p(), {}, {}};
  const ValuationSeries series = valuation_series(spec, p, n_max);
  out.err.reserve(n_max);
  out.relerr.reserve(n_max);
  const BigInt z(static_cast<unsigned long>(out.z_p));
  const BigInt pm1(static_cast<unsigned long>(p.value() - 1));
  BigInt prev = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigInt e = z * static_cast<unsigned long>(n) - pm1 * static_cast<unsigned long>(series.values[n - 1]);
    out.relerr.push_back(e - prev);
    prev = e;
    out.err.push_back(std::move(e));
  }
  return out;
}

namespace {

std::optional<PrimeClassification> classify_or_all(const IntPolynomial& q, const Prime& p, RootOptions opts) {
  try {
    return classify_prime(q, p, opts);
  } catch (const ZeroModPrime&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<ScanEntry> scan_primes(const IntPolynomial& q, std::size_t count, RootOptions opts) {
  const std::vector<Prime> primes = first_primes(count);
  std::vector<std::optional<PrimeClassification>> slots(primes.size());
  std::exception_ptr failure;
  const auto n = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[i] = classify_or_all(q, primes[i], opts);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ScanEntry> out;
  out.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) out.push_back({primes[i], std::move(slots[i])});
  return out;
}

namespace reference {

std::vector<ScanEntry> scan_primes(const IntPolynomial& q, std::size_t count, RootOptions opts) {
  std::vector<ScanEntry> out;
  for (const Prime& p : first_primes(count)) out.push_back({p, classify_or_all(q, p, opts)});
  return out;
}

}  // namespace reference

ExactRational closed_form_slope_xp_pm1(const Prime& p, int sign, const Prime& q) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const BigInt pv(static_cast<unsigned long>(p.value()));
  if (p == q) {
    require_odd(p, "closed_form_slope_xp_pm1 with q == p");
    return ExactRational(2 * pv - 1, pv * (pv - 1));
  }
  const std::uint64_t g = std::gcd(p.value(), q.value() - 1);
  return ExactRational(BigInt(static_cast<unsigned long>(g)), BigInt(static_cast<unsigned long>(q.value() - 1)));
}

std::uint64_t nu_xp_minus_1(const BigInt& x, const Prime& p) {
  require_odd(p, "nu_xp_minus_1");
  if (x == 1) throw ValuationOfZero();
  if (mod_p(x, p) != 1 % p.value()) return 0;
  return 1 + int_valuation(x - 1, p);
}

std::uint64_t nu_xp_plus_1(const BigInt& x, const Prime& p) {
  require_odd(p, "nu_xp_plus_1");
  if (x == -1) throw ValuationOfZero();
  if (mod_p(x, p) != p.value() - 1) return 0;
  return 1 + int_valuation(x + 1, p);
}

std::uint64_t nu_Tp(const BigInt& x, const Prime& p) {
  require_odd(p, "nu_Tp");
  if (x == 1) throw std::invalid_argument("nu_Tp: x = 1 is excluded");
  return mod_p(x, p) == 1 ? 1 : 0;
}

std::uint64_t nu_Sp(const BigInt& x, const Prime& p) {
  require_odd(p, "nu_Sp");
  if (x == -1) throw std::invalid_argument("nu_Sp: x = -1 is excluded");
  return mod_p(x, p) == p.value() - 1 ? 1 : 0;
}

std::uint64_t root_count_xp_plus_1(const Prime& p, const Prime& q) { return std::gcd(p.value(), q.value() - 1); }

ExactRational composite_slope(std::span<const Factor> factors, const Prime& p, unsigned depth_cap) {
  if (factors.empty()) throw std::invalid_argument("composite_slope: factor list is empty");
  ExactRational sum = 0;
  for (const Factor& f : factors)
    sum += ExactRational(BigInt(f.multiplicity)) * exact_slope(f.poly, p, depth_cap);
  return sum;
}

SlopeReport slope_report(const RecurrenceSpec& spec, const Prime& p, std::span<const std::uint64_t> checkpoints,
                         bool exact, unsigned depth_cap) {
  SlopeReport out{p, classify_prime(spec.q, p), std::nullopt, std::nullopt, {}};
  const ExactRational pm1(BigInt(static_cast<unsigned long>(p.value() - 1)));
  if (exact) {
    out.predicted = exact_slope(spec.q, p, depth_cap);
  } else if (out.classification.verdict != Verdict::non_hensel) {
    out.predicted = predicted_slope_hensel(spec.q, p);
  }
  if (out.predicted) out.n_p = *out.predicted * pm1;
  for (std::uint64_t n : checkpoints) out.empirical.emplace_back(n, empirical_slope(spec, p, n));
  return out;
}

}  // namespace padicval

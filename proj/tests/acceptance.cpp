// Acceptance suite. `acceptance` runs every criterion; `acceptance 3b` runs
// one. Prints one PASS/FAIL line per criterion and exits nonzero if any of the
// selected criteria fail. Time budgets are part of the criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "padicval/analysis.hpp"
#include "padicval/errors.hpp"
#include "padicval/expr.hpp"
#include "padicval/padic.hpp"
#include "padicval/recurrence.hpp"

using namespace padicval;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  double budget_ms = 0;  // 0: no time limit
};

// Collects the first few mismatches for the report line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 6) notes_.push_back(what);
  }
  Outcome outcome(std::string summary, double budget_ms = 0) const {
    Outcome o{failed_ == 0, std::move(summary), budget_ms};
    std::ostringstream s;
    s << o.detail << " [" << (total_ - failed_) << "/" << total_ << " checks]";
    for (const auto& n : notes_) s << "; " << n;
    if (failed_ > 6) s << "; ... " << failed_ - 6 << " more";
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::vector<std::string> notes_;
};

std::string str(const ExactRational& r) { return r.to_string(); }
ExactRational frac(long a, long b) { return ExactRational(BigInt(a), BigInt(b)); }
ExactRational big(std::uint64_t v) { return ExactRational(BigInt(static_cast<unsigned long>(v))); }

const IntPolynomial kQ = parse_poly("x^5+2x^3+3");

Outcome c1() {
  Check c;
  const auto roots = roots_mod_p(kQ, Prime(5));
  c.expect(roots == std::vector<std::uint64_t>{3, 4}, "roots mod 5");
  c.expect(classify_prime(kQ, Prime(5)).verdict == Verdict::hensel, "verdict at 5");
  return c.outcome("roots of x^5+2x^3+3 mod 5 are [3,4], Hensel", 1.0);
}

Outcome c2() {
  Check c;
  std::set<std::uint64_t> bad;
  const auto entries = scan_primes(kQ, 5000);
  c.expect(entries.size() == 5000 && entries.back().p.value() == 48611, "scanned the first 5000 primes");
  for (const auto& e : entries)
    if (e.all_residues() || e.classification->verdict == Verdict::non_hensel) bad.insert(e.p.value());
  std::string got;
  for (auto p : bad) got += std::to_string(p) + " ";
  c.expect(bad == std::set<std::uint64_t>{3, 11, 29}, "non-Hensel set = " + got);
  return c.outcome("non-Hensel primes among the first 5000 are {3, 11, 29}", 60000.0);
}

Outcome c3a() {
  Check c;
  const std::pair<std::uint64_t, ExactRational> want[] = {{3, frac(8, 3)}, {11, frac(3, 1)}, {29, frac(57, 29)}};
  for (const auto& [p, n] : want) {
    const auto t0 = Clock::now();
    const ExactRational got = asymptotic_zero_number(kQ, Prime(p));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    c.expect(got == n, "N_" + std::to_string(p) + " = " + str(got));
    c.expect(ms < 1000, "N_" + std::to_string(p) + " took " + std::to_string(ms) + " ms");
  }
  return c.outcome("x^5+2x^3+3: N_3 = 8/3, N_11 = 3, N_29 = 57/29");
}

Outcome c3b() {
  Check c;
  const std::vector<Factor> f{{parse_poly("x^3+1"), 1}, {parse_poly("x^5+1"), 1}};
  auto n_of = [&](std::uint64_t p) { return composite_slope(f, Prime(p)) * big(p - 1); };
  const auto t0 = Clock::now();
  c.expect(n_of(3) == frac(8, 3), "N_3 = " + str(n_of(3)));
  c.expect(n_of(5) == frac(14, 5), "N_5 = " + str(n_of(5)));
  for (std::uint64_t p : {7, 11, 13, 31}) {
    const std::uint64_t g = std::gcd<std::uint64_t>(3, p - 1) + std::gcd<std::uint64_t>(5, p - 1);
    c.expect(n_of(p) == big(g), "N_" + std::to_string(p) + " = " + str(n_of(p)) + ", gcd formula " + std::to_string(g));
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  c.expect(ms < 1000 * 6, "took " + std::to_string(ms) + " ms");
  return c.outcome("(x^3+1)(x^5+1): N_3 = 8/3, N_5 = 14/5, gcd(3,p-1)+gcd(5,p-1) at 7, 11, 13, 31");
}

Outcome c3c() {
  Check c;
  std::vector<std::string> true_counts;
  for (std::uint64_t p : {2, 3, 5}) {
    const BigInt pz(static_cast<unsigned long>(p));
    const std::vector<Factor> f{{IntPolynomial(std::vector<BigInt>{1, pz}), 2},
                                {IntPolynomial(std::vector<BigInt>{1, pz + 1}), 1}};
    for (std::uint64_t q : oracle::small_primes(13)) {
      const ExactRational got = composite_slope(f, Prime(q)) * big(q - 1);
      const std::uint64_t omega = (p + 1) % q == 0 ? 1 : 0;
      const std::uint64_t want = q == p ? 1 : 2 + omega;
      c.expect(got == big(want), "N_" + std::to_string(q) + "(A_" + std::to_string(p) + ") = " + str(got) +
                                     ", formula gives " + std::to_string(want));
    }
  }
  return c.outcome("A_p = (px+1)^2((p+1)x+1): N_q = 1 if q = p, else 2 + omega_{p,q} (omega = 1 iff q | p+1), "
                   "p in {2,3,5}, q <= 13");
}

Outcome c4() {
  Check c;
  const RecurrenceSpec spec = make_spec(kQ);
  const std::uint64_t n = 100000;
  const auto t0 = Clock::now();
  const ExactRational e5 = empirical_slope(spec, Prime(5), n);
  c.expect(abs(e5 - ExactRational(2)) <= frac(1, 100), "(p-1)nu_5/n = " + std::to_string(e5.to_double()));
  const ExactRational r3(BigInt(static_cast<unsigned long>(valuation_tn_direct(spec, Prime(3), n))), BigInt(100000));
  c.expect(abs(r3 - frac(4, 3)) <= frac(2, 100), "nu_3/n = " + std::to_string(r3.to_double()));
  const ExactRational r29(BigInt(static_cast<unsigned long>(valuation_tn_direct(spec, Prime(29), n))), BigInt(100000));
  c.expect(abs(r29 - frac(57, 812)) <= frac(2, 100), "nu_29/n = " + std::to_string(r29.to_double()));
  // The p = 5 value through the direct oracle too, so the budget covers it.
  c.expect(valuation_tn_direct(spec, Prime(5), n) == valuation_tn_fast(spec, Prime(5), n), "engines disagree at p = 5");
  (void)t0;
  return c.outcome("n = 10^5: |(p-1)nu_5/n - 2| <= 1/100, |nu_3/n - 4/3| <= 2/100, |nu_29/n - 57/812| <= 2/100",
                   30000.0);
}

Outcome c5() {
  Check c;
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<std::uint64_t> pick_n(1, 10000);
  const auto primes = oracle::small_primes(97);
  std::size_t cases = 0;
  while (cases < 250) {
    const IntPolynomial q = oracle::random_poly(rng, 6, 50);
    if (q.degree() < 1) continue;
    const RecurrenceSpec spec = make_spec(q, true);
    for (std::uint64_t pv : primes) {
      const Prime p(pv);
      if (content(q) % static_cast<unsigned long>(pv) == 0) continue;
      if (classify_prime(q, p).verdict != Verdict::hensel) continue;
      const std::uint64_t n = pick_n(rng);
      const auto fast = valuation_tn_fast(spec, p, n), direct = valuation_tn_direct(spec, p, n);
      c.expect(fast == direct, q.to_string() + " p=" + std::to_string(pv) + " n=" + std::to_string(n) + ": fast " +
                                   std::to_string(fast) + " direct " + std::to_string(direct));
      ++cases;
      break;
    }
  }
  return c.outcome("fast == direct on 250 random Hensel cases (deg <= 6, |c| <= 50, p <= 97, n <= 10^4)", 30000.0);
}

Outcome c6() {
  Check c;
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    const ValuationSeries s = valuation_series(make_spec(IntPolynomial::x()), Prime(p), 10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
      const std::uint64_t closed = (n - oracle::digit_sum_via_string(BigInt(static_cast<unsigned long>(n)), static_cast<int>(p))) / (p - 1);
      const std::uint64_t floors = oracle::legendre_floor_sum(n, p);
      c.expect(s.at(n) == closed && closed == floors,
               "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + std::to_string(s.at(n)));
    }
  }
  return c.outcome("Q = x: series == (n - s_p(n))/(p-1) == sum floor(n/p^i), n <= 10^4, p in {2,3,5,7,11}");
}

Outcome c7a() {
  Check c;
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    const Prime pp(p);
    for (long x = -1000; x <= 1000; ++x) {
      const BigInt bx(x);
      BigInt xp;
      mpz_pow_ui(xp.get_mpz_t(), bx.get_mpz_t(), p);
      BigInt t = 0, s = 0, up = 1, alt = 1;
      for (std::uint64_t i = 0; i < p; ++i, up *= bx, alt *= -bx) {
        t += up;
        s += alt;
      }
      const std::string at = " p=" + std::to_string(p) + " x=" + std::to_string(x);
      if (x != 1) {
        c.expect(nu_xp_minus_1(bx, pp) == oracle::valuation(xp - 1, p), "x^p-1" + at);
        c.expect(nu_Tp(bx, pp) == oracle::valuation(t, p), "T_p" + at);
      }
      if (x != -1) {
        c.expect(nu_xp_plus_1(bx, pp) == oracle::valuation(xp + 1, p), "x^p+1" + at);
        c.expect(nu_Sp(bx, pp) == oracle::valuation(s, p), "S_p" + at);
      }
    }
  }
  return c.outcome("closed-form valuations of x^p-1, x^p+1, T_p, S_p, odd p <= 13, |x| <= 1000");
}

Outcome c7b() {
  Check c;
  const auto primes = oracle::small_primes(100);
  for (std::uint64_t p : primes)
    for (std::uint64_t q : primes) {
      const IntPolynomial poly = IntPolynomial::monomial(1, p) + IntPolynomial::constant(1);
      const std::size_t count = oracle::roots(poly, q).size();
      const std::uint64_t g = std::gcd(p, q - 1);
      c.expect(root_count_xp_plus_1(Prime(p), Prime(q)) == g, "root_count != gcd");
      c.expect(count == g, "x^" + std::to_string(p) + "+1 mod " + std::to_string(q) + " has " + std::to_string(count) +
                               " roots, gcd(p,q-1) = " + std::to_string(g));
    }
  return c.outcome("#roots of x^p+1 mod q == gcd(p, q-1) for all primes p, q <= 100");
}

// Q(r) mod m by Horner in 128-bit, coefficients reduced first.
std::uint64_t eval_mod(const std::vector<std::uint64_t>& cm, std::uint64_t r, std::uint64_t m) {
  unsigned __int128 acc = 0;
  for (auto it = cm.rbegin(); it != cm.rend(); ++it) acc = (acc * r + *it) % m;
  return static_cast<std::uint64_t>(acc);
}

Outcome c8() {
  Check c;
  std::vector<IntPolynomial> corpus{kQ, parse_poly("x^4-x^3+3x^2-3x+3"), parse_poly("x^2+1"), parse_poly("x^3-2"),
                                    IntPolynomial::x() + IntPolynomial::constant(1), parse_poly("x^3+1"),
                                    parse_poly("x^5+1"), parse_poly("x^6-7x^4+3x+11")};
  std::mt19937_64 rng(8);
  while (corpus.size() < 16) {
    IntPolynomial q = oracle::random_poly(rng, 5, 40);
    if (q.degree() >= 1) corpus.push_back(q);
  }
  std::size_t lifts = 0;
  for (const auto& q : corpus)
    for (std::uint64_t p : oracle::small_primes(97)) {
      if (content(q) % static_cast<unsigned long>(p) == 0) continue;
      const PrimeClassification cls = classify_prime(q, Prime(p));
      for (std::uint64_t a : cls.roots) {
        if (std::find(cls.non_hensel_roots.begin(), cls.non_hensel_roots.end(), a) != cls.non_hensel_roots.end()) continue;
        unsigned k = 0;
        std::uint64_t m = p;
        while (m * p <= 1000000) m *= p, ++k;
        const HenselRoot root = hensel_lift(q, Prime(p), a, k);
        ++lifts;
        std::uint64_t mod = 1;
        for (unsigned s = 0; s <= k; ++s) {
          mod *= p;
          std::vector<std::uint64_t> cm;
          for (const auto& v : q.coeffs()) {
            BigInt r;
            mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), mod);
            cm.push_back(r.get_ui());
          }
          std::vector<std::uint64_t> sols;
          for (std::uint64_t r = a; r < mod; r += p)
            if (eval_mod(cm, r, mod) == 0) sols.push_back(r);
          const std::string at = q.to_string() + " p=" + std::to_string(p) + " a=" + std::to_string(a) + " s=" + std::to_string(s);
          c.expect(sols.size() == 1, at + ": " + std::to_string(sols.size()) + " solutions");
          if (sols.size() == 1) c.expect(root.truncation_value(s) == BigInt(static_cast<unsigned long>(sols[0])), at + ": lift differs");
          if (s > 0) {
            BigInt prev;
            mpz_fdiv_r_ui(prev.get_mpz_t(), root.truncation_value(s).get_mpz_t(), mod / p);
            c.expect(prev == root.truncation_value(s - 1), at + ": prefix inconsistent");
          }
        }
      }
    }
  return c.outcome(std::to_string(lifts) + " lifts over a 16-polynomial corpus, p <= 97, p^(k+1) <= 10^6: unique brute-force "
                   "solution at every level and prefix-consistent");
}

Outcome c9() {
  Check c;
  const ErrorSeries leg = error_series(make_spec(IntPolynomial::x()), Prime(2), 10000);
  for (unsigned long n = 1; n <= 10000; ++n)
    c.expect(leg.err[n - 1] == BigInt(oracle::digit_sum_via_string(BigInt(n), 2)), "err[" + std::to_string(n) + "]");
  const std::pair<const char*, std::uint64_t> instances[] = {
      {"x^5+2x^3+3", 5}, {"x^5+2x^3+3", 7}, {"x^5+2x^3+3", 3}, {"x^5+2x^3+3", 29}, {"x^2+1", 5},
      {"x^2+1", 13},     {"x^3-2", 31},     {"x^8+x^5+x^3+1", 5}, {"x", 3}, {"x^4-x^3+3x^2-3x+3", 11}};
  for (const auto& [text, pv] : instances) {
    const RecurrenceSpec spec = make_spec(parse_poly(text), true);
    const Prime p(pv);
    const ErrorSeries es = error_series(spec, p, 5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      const std::uint64_t v = oracle::valuation(oracle::eval(spec.q, BigInt(static_cast<unsigned long>(spec.n0 + n))), pv);
      const BigInt want = BigInt(static_cast<unsigned long>(es.z_p)) - BigInt(static_cast<unsigned long>((pv - 1) * v));
      c.expect(es.relerr[n - 1] == want, std::string(text) + " p=" + std::to_string(pv) + " n=" + std::to_string(n));
    }
  }
  return c.outcome("err == s_2(n) for Q = x, n <= 10^4; relerr == z_p - (p-1)nu_p(Q(n0+n)) on 10 instances");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1", c1}, {"2", c2}, {"3a", c3a}, {"3b", c3b}, {"3c", c3c}, {"4", c4},
      {"5", c5}, {"6", c6}, {"7a", c7a}, {"7b", c7b}, {"8", c8}, {"9", c9}};
  std::set<std::string> selected;
  for (int i = 1; i < argc; ++i) selected.insert(argv[i]);
  for (const auto& s : selected)
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == s; })) {
      std::cerr << "unknown criterion '" << s << "'\n";
      return 2;
    }

  int failed = 0, ran = 0;
  for (const auto& [id, fn] : criteria) {
    if (!selected.empty() && !selected.count(id)) continue;
    ++ran;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what(), 0};
    }
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (o.budget_ms > 0 && ms > o.budget_ms) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<long>(o.budget_ms)) + " ms budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", ms);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.detail << " (" << timing << ")\n";
    if (!o.pass) ++failed;
  }
  std::cout << ran - failed << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

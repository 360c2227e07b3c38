#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padicval/expr.hpp"
#include "padicval/reference.hpp"

// Registered with OMP_NUM_THREADS=4 so the parallel paths really split work.

using namespace padicval;

TEST_CASE("term_valuations matches the serial kernel") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    IntPolynomial q = oracle::random_poly(rng, 6, 50);
    if (q.degree() < 1) continue;
    const RecurrenceSpec spec = make_spec(q, true);
    for (std::uint64_t p : {2, 3, 7, 29}) {
      CAPTURE(q.to_string());
      CAPTURE(p);
      CHECK(term_valuations(spec, Prime(p), 3000) == reference::term_valuations(spec, Prime(p), 3000));
    }
  }
}

TEST_CASE("valuation_tn_direct matches the serial kernel") {
  const RecurrenceSpec spec = make_spec(parse_poly("x^5+2x^3+3"));
  for (std::uint64_t p : {3, 5, 11, 29})
    for (std::uint64_t n : {1u, 17u, 5000u, 40000u}) CHECK(valuation_tn_direct(spec, Prime(p), n) == reference::valuation_tn_direct(spec, Prime(p), n));
  // Wide terms take the mpz path.
  const RecurrenceSpec wide = make_spec(parse_poly("x^9+1000000000000x+7"));
  CHECK(valuation_tn_direct(wide, Prime(7), 20000) == reference::valuation_tn_direct(wide, Prime(7), 20000));
}

TEST_CASE("scan_primes matches the serial scan") {
  for (const char* text : {"x^5+2x^3+3", "x^8+x^5+x^3+1", "6x^2+6", "x^7-x-1"}) {
    const IntPolynomial q = parse_poly(text);
    CAPTURE(text);
    CHECK(scan_primes(q, 1500) == reference::scan_primes(q, 1500));
  }
  // Exercise the gcd path on both sides.
  const IntPolynomial q = parse_poly("x^4+3x+5");
  CHECK(scan_primes(q, 700, {RootStrategy::gcd, 4096}) == reference::scan_primes(q, 700, {RootStrategy::scan, 4096}));
}

TEST_CASE("parallel output is stable across runs") {
  const IntPolynomial q = parse_poly("x^3-5x+1");
  const auto first = scan_primes(q, 2000);
  for (int i = 0; i < 3; ++i) CHECK(scan_primes(q, 2000) == first);
}

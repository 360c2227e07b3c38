#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padicval/errors.hpp"
#include "padicval/expr.hpp"

using namespace padicval;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no ParseError for \"" << std::string(text) << "\"");
  return 0;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x^5+2x^3+3").coeffs() == std::vector<BigInt>{3, 0, 0, 2, 0, 1});
  CHECK(parse_poly("x^4-x^3+3x^2-3x+3").coeffs() == std::vector<BigInt>{3, -3, 3, -1, 1});
  CHECK(parse_poly("x") == IntPolynomial::x());
  CHECK(parse_poly("-7") == IntPolynomial::constant(-7));
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("2*x^2 - 3 x + 1") == parse_poly("2x^2-3x+1"));
  CHECK(parse_poly(" x ^ 2 + x + x - 2x ") == parse_poly("x^2"));
  CHECK(parse_poly("x^2-x^2").is_zero());
  CHECK(parse_poly("123456789012345678901234567890x").leading() == BigInt("123456789012345678901234567890"));
  CHECK(parse_poly("x^0+x^0") == IntPolynomial::constant(2));
}

TEST_CASE("parse_poly errors") {
  CHECK(error_offset("(bad") == 0);
  CHECK(error_offset("") == 0);
  CHECK(error_offset("   ") == 3);
  CHECK(error_offset("x^") == 2);
  CHECK(error_offset("x^-1") == 2);
  CHECK(error_offset("2x+") == 3);
  CHECK(error_offset("x y") == 2);
  CHECK(error_offset("x^2^3") == 3);
  CHECK(error_offset("3*") == 2);
  CHECK(error_offset("x^99999999999") == 2);
  CHECK_THROWS_AS(parse_poly("y"), std::invalid_argument);
  try {
    parse_poly("(bad");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 0") != std::string::npos);
  }
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(0, 10);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  std::bernoulli_distribution sparse(0.3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = sparse(rng) ? 0 : coef(rng);
    const IntPolynomial q(std::move(c));
    CAPTURE(q.to_string());
    CHECK(parse_poly(q.to_string()) == q);
  }
}

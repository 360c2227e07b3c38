#include "padicval/expr.hpp"

#include <cctype>
#include <map>
#include <string>

#include "padicval/errors.hpp"

namespace padicval {

namespace {

constexpr unsigned long kMaxExponent = 1u << 20;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IntPolynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "a term");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    for (;;) {
      term(sign);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, "'+', '-' or end of input");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    std::vector<BigInt> coeffs;
    if (!terms_.empty()) coeffs.resize(terms_.rbegin()->first + 1);
    for (auto& [k, c] : terms_) coeffs[k] = c;
    return IntPolynomial(std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (is_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void term(int sign) {
    if (at_end()) throw ParseError(pos_, "an integer or 'x'");
    BigInt coeff = 1;
    bool has_coeff = false;
    if (is_digit()) {
      coeff = BigInt(digits());
      has_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError(pos_, "'x' after '*'");
      }
    }
    unsigned long exponent = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (!is_digit()) throw ParseError(pos_, "an unsigned exponent after '^'");
        const std::string e = digits();
        if (e.size() > 7 || std::stoul(e) > kMaxExponent) throw ParseError(at, "an exponent at most 1048576");
        exponent = std::stoul(e);
      }
    } else if (!has_coeff) {
      throw ParseError(pos_, "an integer or 'x'");
    }
    terms_[exponent] += sign < 0 ? BigInt(-coeff) : coeff;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<unsigned long, BigInt> terms_;
};

}  // namespace

IntPolynomial parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace padicval

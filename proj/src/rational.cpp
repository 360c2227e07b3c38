#include "padicval/rational.hpp"

#include <stdexcept>

namespace padicval {

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.value_ == 0) throw std::invalid_argument("ExactRational: division by zero");
  value_ /= o.value_;
  return *this;
}

ExactRational ExactRational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den = 1;
  auto read = [](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) throw std::invalid_argument("not a rational: '" + part + "'");
  };
  if (slash == std::string::npos) {
    read(s, num);
  } else {
    read(s.substr(0, slash), num);
    read(s.substr(slash + 1), den);
  }
  return ExactRational(num, den);
}

std::string ExactRational::serialize() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

std::string ExactRational::to_string() const {
  return is_integer() ? value_.get_num().get_str() : serialize();
}

}  // namespace padicval

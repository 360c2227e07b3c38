#include "padicval/poly.hpp"

#include "fp_poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace padicval {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ascending(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt IntPolynomial::leading() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

BigInt evaluate(const IntPolynomial& q, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= x;
    acc += c[k];
  }
  return acc;
}

std::uint64_t evaluate_mod(const IntPolynomial& q, std::uint64_t x, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("evaluate_mod: modulus must be at least 2");
  using u128 = unsigned __int128;
  const std::uint64_t xr = x % m;
  std::uint64_t acc = 0;
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    const std::uint64_t ck = mpz_fdiv_ui(c[k].get_mpz_t(), m);
    acc = static_cast<std::uint64_t>((static_cast<u128>(acc) * xr + ck) % m);
  }
  return acc;
}

BigInt evaluate_mod(const IntPolynomial& q, const BigInt& x, const BigInt& m) {
  if (m < 2) throw std::invalid_argument("evaluate_mod: modulus must be at least 2");
  BigInt xr, acc = 0, ck;
  mpz_fdiv_r(xr.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= xr;
    acc += c[k];
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

IntPolynomial derivative(const IntPolynomial& q) {
  const auto& c = q.coeffs();
  if (c.size() <= 1) return {};
  std::vector<BigInt> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial affine_substitute(const IntPolynomial& q, const BigInt& a, const BigInt& b) {
  // Horner in the ring Z[k]: acc = acc * (a*k + b) + c_i.
  const IntPolynomial lin(std::vector<BigInt>{b, a});
  IntPolynomial acc;
  const auto& c = q.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= lin;
    acc += IntPolynomial::constant(c[k]);
  }
  return acc;
}

BigInt content(const IntPolynomial& q) {
  BigInt g = 0;
  for (const auto& c : q.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial divide_exact(const IntPolynomial& q, const BigInt& c) {
  if (c == 0) throw std::invalid_argument("divide_exact: division by zero");
  std::vector<BigInt> out(q.coeffs());
  for (auto& v : out) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      throw std::invalid_argument("divide_exact: coefficient not divisible");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial primitive_part(const IntPolynomial& q) {
  if (q.is_zero()) return q;
  BigInt g = content(q);
  if (q.leading() < 0) g = -g;
  return divide_exact(q, g);
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  const BigInt lb = b.leading();
  const int db = b.degree();
  int remaining = a.degree() - db + 1;
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const IntPolynomial shift = IntPolynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = r * lb - shift * b;
    --remaining;
  }
  for (; remaining > 0; --remaining) r *= lb;
  return r;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_quotient: zero divisor");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  const BigInt lb = b.leading();
  const int db = b.degree();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1));
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const BigInt lr = r.leading();
    if (!mpz_divisible_p(lr.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    quot[shift] = t;
    r -= IntPolynomial::monomial(t, shift) * b;
  }
  if (!r.is_zero()) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial integer_poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("integer_poly_gcd: both inputs are zero");
  IntPolynomial u = primitive_part(a);
  IntPolynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  if (u.degree() == 0) return IntPolynomial::constant(1);
  return primitive_part(u);
}

std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  // powers[k] = gcd(powers[k-1], powers[k-1]') = prod_{i > k} f_i^(i-k);
  // rad[k] = powers[k] / powers[k+1] = prod_{i > k} f_i; f_{k+1} = rad[k] / rad[k+1].
  std::vector<IntPolynomial> powers{primitive_part(q)};
  while (powers.back().degree() > 0) powers.push_back(integer_poly_gcd(powers.back(), derivative(powers.back())));
  std::vector<IntPolynomial> rad;
  for (std::size_t k = 0; k + 1 < powers.size(); ++k) rad.push_back(primitive_part(*exact_quotient(powers[k], powers[k + 1])));
  rad.push_back(IntPolynomial::constant(1));
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  for (std::size_t k = 0; k + 1 < rad.size(); ++k) {
    IntPolynomial f = primitive_part(*exact_quotient(rad[k], rad[k + 1]));
    if (f.degree() > 0) out.emplace_back(std::move(f), static_cast<unsigned>(k + 1));
  }
  return out;
}

namespace {

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Nonnegative integer roots of a squarefree f with f(0) != 0. Picks a prime p
// with f mod p squarefree, so every root mod p is simple, lifts each one past
// twice the Cauchy bound and keeps the lifts that are actual roots.
void squarefree_roots(const IntPolynomial& f, std::set<BigInt>& out) {
  const auto& c = f.coeffs();
  const BigInt lead = abs(c.back());
  BigInt bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, BigInt(abs(c[i]) / lead));
  bound += 1;
  bound = std::min(bound, BigInt(abs(c[0])));

  const IntPolynomial df = derivative(f);
  std::uint64_t p = 2;
  for (;; ++p) {
    if (!small_prime(p) || lead % static_cast<unsigned long>(p) == 0) continue;
    if (fp::degree(fp::gcd(fp::reduce(f, p), fp::reduce(df, p), p)) == 0) break;
  }
  const BigInt pz(static_cast<unsigned long>(p));
  for (std::uint64_t b = 0; b < p; ++b) {
    if (evaluate_mod(f, b, p) != 0) continue;
    const std::uint64_t inv = fp::inv_mod(evaluate_mod(df, b, p), p);
    BigInt r = static_cast<unsigned long>(b), pk = pz;
    while (pk <= 2 * bound) {
      BigInt t = evaluate(f, r) / pk;
      BigInt digit = -t * static_cast<unsigned long>(inv);
      mpz_fdiv_r(digit.get_mpz_t(), digit.get_mpz_t(), pz.get_mpz_t());
      r += digit * pk;
      pk *= pz;
    }
    if (r <= bound && evaluate(f, r) == 0) out.insert(r);
  }
}

}  // namespace

std::vector<BigInt> nonneg_integer_roots(const IntPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("nonneg_integer_roots: zero polynomial");
  const auto& c = q.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;

  std::set<BigInt> roots;
  if (low > 0) roots.insert(0);
  if (low + 1 == c.size()) return {roots.begin(), roots.end()};
  const IntPolynomial rest(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  for (const auto& [part, mult] : squarefree_decomposition(rest)) squarefree_roots(part, roots);
  return {roots.begin(), roots.end()};
}

}  // namespace padicval

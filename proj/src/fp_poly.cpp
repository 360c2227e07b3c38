#include "fp_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace padicval::fp {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s < a || s >= p) s -= p;
  return s;
}

static std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly reduce(const IntPolynomial& q, std::uint64_t p) {
  Poly f;
  f.reserve(q.coeffs().size());
  for (const auto& c : q.coeffs()) f.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(f);
  return f;
}

Poly make_monic(Poly f, std::uint64_t p) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  const std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
  return f;
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  }
  trim(out);
  return out;
}

// Long division; fills the quotient when requested.
static Poly divide(Poly a, const Poly& f, std::uint64_t p, Poly* q) {
  if (f.empty()) throw std::invalid_argument("fp::divide: zero divisor");
  trim(a);
  const int df = degree(f);
  const std::uint64_t inv = inv_mod(f.back(), p);
  if (q) q->assign(a.size() >= f.size() ? a.size() - f.size() + 1 : 0, 0);
  while (degree(a) >= df) {
    const std::size_t shift = a.size() - f.size();
    const std::uint64_t t = mul_mod(a.back(), inv, p);
    if (q) (*q)[shift] = t;
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(t, f[i], p), p);
    trim(a);
  }
  return a;
}

Poly rem(Poly a, const Poly& f, std::uint64_t p) { return divide(std::move(a), f, p, nullptr); }

Poly quot(Poly a, const Poly& f, std::uint64_t p) {
  Poly q;
  divide(std::move(a), f, p, &q);
  trim(q);
  return q;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

Poly pow_mod_poly(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result = rem(Poly{1}, f, p);
  Poly b = rem(base, f, p);
  while (e > 0) {
    if (e & 1u) result = rem(mul(result, b, p), f, p);
    e >>= 1;
    if (e > 0) b = rem(mul(b, b, p), f, p);
  }
  return result;
}

static void split_into(const Poly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  const int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    // g = x + g0 (monic)
    out.push_back(g[0] == 0 ? 0 : p - g[0]);
    return;
  }
  if (p == 2) {
    // g divides x^2 - x.
    if (g[0] == 0) out.push_back(0);
    std::uint64_t s = 0;
    for (auto c : g) s ^= c & 1u;
    if (s == 0) out.push_back(1);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  const std::uint64_t half = (p - 1) / 2;
  for (;;) {
    // gcd(g, (x + a)^((p-1)/2) - 1) separates roots r by whether r + a is a
    // nonzero square.
    Poly lin{pick(rng), 1};
    Poly w = pow_mod_poly(lin, half, g, p);
    w = sub(std::move(w), Poly{1}, p);
    Poly h = gcd(g, w, p);
    const int dh = degree(h);
    if (dh > 0 && dh < d) {
      split_into(h, p, rng, out);
      split_into(make_monic(quot(g, h, p), p), p, rng, out);
      return;
    }
  }
}

std::vector<std::uint64_t> split_linear(const Poly& g, std::uint64_t p) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p);
  std::vector<std::uint64_t> out;
  split_into(make_monic(g, p), p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace padicval::fp

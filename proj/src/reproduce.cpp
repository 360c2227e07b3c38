#include "padicval/reproduce.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "padicval/errors.hpp"
#include "padicval/expr.hpp"

namespace padicval {

namespace {

class Recorder {
 public:
  Recorder(std::vector<Claim>& out, std::string example) : out_(out), example_(std::move(example)) {}

  void check(std::string description, const std::string& expected, const std::string& actual) {
    out_.push_back({example_, std::move(description), expected, actual, expected == actual});
  }

  template <typename F>
  void check_call(std::string description, const std::string& expected, F&& compute) {
    std::string actual;
    try {
      actual = compute();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    check(std::move(description), expected, actual);
  }

 private:
  std::vector<Claim>& out_;
  std::string example_;
};

std::string list_text(const std::vector<std::uint64_t>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

std::string ulong_text(std::uint64_t v) { return std::to_string(v); }

const IntPolynomial& example_q() {
  static const IntPolynomial q = parse_poly("x^5+2*x^3+3");
  return q;
}

const IntPolynomial& example_h() {
  static const IntPolynomial h = parse_poly("x^4-x^3+3*x^2-3*x+3");
  return h;
}

void example1(std::vector<Claim>& out, const ReproduceOptions& opts) {
  Recorder r(out, "example1");
  const IntPolynomial& q = example_q();
  const Prime p5(5);
  r.check("zeros of Q mod 5", "[3,4]", list_text(roots_mod_p(q, p5)));
  r.check("p = 5 is a Hensel prime", "hensel", std::string(to_string(classify_prime(q, p5).verdict)));
  r.check_call("nu_5(t_n) ~ n/2", "1/2", [&] { return predicted_slope_hensel(q, p5).to_string(); });
  r.check_call("N_5(Q) = z_5", "2", [&] { return asymptotic_zero_number(q, p5, opts.depth_cap).to_string(); });
}

void example2(std::vector<Claim>& out, const ReproduceOptions& opts) {
  Recorder r(out, "example2");
  const IntPolynomial& q = example_q();
  const IntPolynomial& h = example_h();
  const IntPolynomial x1 = parse_poly("x+1");
  r.check("Q = (x+1) H", q.to_string(), (x1 * h).to_string());

  const Prime p3(3), p11(11), p29(29);
  r.check("H(3k)", "81*x^4-27*x^3+27*x^2-9*x+3", affine_substitute(h, 3, 0).to_string());
  {
    const IntPolynomial h3 = divide_exact(affine_substitute(h, 3, 0), 3);
    bool unit = true;
    for (long k = 1; k <= 1000 && unit; ++k) unit = evaluate_mod(h3, static_cast<std::uint64_t>(k), 3) != 0;
    r.check("nu_3(H(3k)) = 1 for k = 1..1000", "true", unit ? "true" : "false");
  }
  const auto c3 = classify_prime(h, p3);
  r.check("zeros of H mod 3", "[0,1]", list_text(c3.roots));
  r.check("non-Hensel zeros of H mod 3", "[0]", list_text(c3.non_hensel_roots));

  r.check("zeros of H mod 29", "[14]", list_text(roots_mod_p(h, p29)));
  const IntPolynomial h29 = affine_substitute(h, 29, 14);
  r.check("H(29k+14)", "707281*x^4+1341395*x^3+956217*x^2+303601*x+36221", h29.to_string());
  {
    std::vector<std::uint64_t> vals;
    for (const auto& c : h29.coeffs()) vals.push_back(int_valuation(c, p29));
    r.check("29-adic valuations of the coefficients of H(29k+14)", "[1,2,2,3,4]", list_text(vals));
  }
  const auto c11 = classify_prime(h, p11);
  r.check("z_11(H)", "2", ulong_text(c11.z_p()));
  r.check("11 is a Hensel prime for H", "hensel", std::string(to_string(c11.verdict)));
  r.check("11 is a Hensel prime for x+1", "hensel", std::string(to_string(classify_prime(x1, p11).verdict)));

  {
    std::vector<std::uint64_t> bad;
    for (const auto& e : scan_primes(q, opts.scan_count))
      if (e.classification && e.classification->verdict == Verdict::non_hensel) bad.push_back(e.p.value());
    r.check("non-Hensel primes among the first " + std::to_string(opts.scan_count) + " primes", "[3,11,29]",
            list_text(bad));
  }

  r.check_call("nu_3(t_n(Q)) ~ 4n/3", "4/3", [&] { return exact_slope(q, p3, opts.depth_cap).to_string(); });
  r.check_call("nu_3(t_n(H)) ~ 5n/6", "5/6", [&] { return exact_slope(h, p3, opts.depth_cap).to_string(); });
  r.check_call("N_3(Q)", "8/3", [&] { return asymptotic_zero_number(q, p3, opts.depth_cap).to_string(); });
  r.check_call("nu_11(t_n(Q)) ~ 3n/10", "3/10", [&] { return exact_slope(q, p11, opts.depth_cap).to_string(); });
  r.check_call("N_11(Q)", "3", [&] { return asymptotic_zero_number(q, p11, opts.depth_cap).to_string(); });
  r.check_call("nu_29(t_n(H)) ~ n/29", "1/29", [&] { return exact_slope(h, p29, opts.depth_cap).to_string(); });
  r.check_call("nu_29(t_n(Q)) ~ 57n/812", "57/812", [&] { return exact_slope(q, p29, opts.depth_cap).to_string(); });
  r.check_call("N_29(Q)", "57/29", [&] { return asymptotic_zero_number(q, p29, opts.depth_cap).to_string(); });
  const Factor split[] = {{x1, 1}, {h, 1}};
  for (const Prime& p : {p3, p11, p29}) {
    r.check_call("factor split agrees with Q at p = " + ulong_text(p), exact_slope(q, p, opts.depth_cap).to_string(),
                 [&] { return composite_slope(split, p, opts.depth_cap).to_string(); });
  }
}

void example3(std::vector<Claim>& out, const ReproduceOptions& opts) {
  Recorder r(out, "example3");
  const IntPolynomial q = parse_poly("x^8+x^5+x^3+1");
  const IntPolynomial a = parse_poly("x^3+1"), b = parse_poly("x^5+1");
  r.check("Q = (x^3+1)(x^5+1)", q.to_string(), (a * b).to_string());
  r.check("gcd(Q, Q')", "x+1", integer_poly_gcd(q, derivative(q)).to_string());
  {
    bool none = true, witness = true;
    for (const auto& e : scan_primes(q, 100)) {
      if (!e.classification || e.classification->verdict == Verdict::no_roots) continue;
      if (e.classification->verdict == Verdict::hensel) none = false;
      const auto& nh = e.classification->non_hensel_roots;
      if (std::find(nh.begin(), nh.end(), e.p.value() - 1) == nh.end()) witness = false;
    }
    r.check("no Hensel prime among the first 100 primes", "true", none ? "true" : "false");
    r.check("p-1 is a non-Hensel zero at each such prime", "true", witness ? "true" : "false");
  }
  const Factor f[] = {{a, 1}, {b, 1}};
  const Prime p3(3), p5(5);
  r.check("closed form nu_3(t_n(x^3+1)) slope", "5/6", closed_form_slope_xp_pm1(p3, 1, p3).to_string());
  r.check_call("recursion nu_3(t_n(x^3+1)) slope", "5/6", [&] { return exact_slope(a, p3, opts.depth_cap).to_string(); });
  r.check_call("nu_3(t_n(Q)) ~ 4n/3", "4/3", [&] { return composite_slope(f, p3, opts.depth_cap).to_string(); });
  r.check_call("nu_5(t_n(Q)) ~ 7n/10", "7/10", [&] { return composite_slope(f, p5, opts.depth_cap).to_string(); });
  auto n_of = [&](const Prime& p) {
    return (composite_slope(f, p, opts.depth_cap) * ExactRational(BigInt(static_cast<unsigned long>(p.value() - 1))))
        .to_string();
  };
  r.check_call("N_3(Q)", "8/3", [&] { return n_of(p3); });
  r.check_call("N_5(Q)", "14/5", [&] { return n_of(p5); });
  for (std::uint64_t pv : {7, 11, 13, 31}) {
    const Prime p(pv);
    const auto expected = std::gcd<std::uint64_t>(3, pv - 1) + std::gcd<std::uint64_t>(5, pv - 1);
    r.check_call("N_" + ulong_text(pv) + "(Q) = gcd(3,p-1) + gcd(5,p-1)", ulong_text(expected), [&] { return n_of(p); });
  }
}

void example4(std::vector<Claim>& out, const ReproduceOptions& opts) {
  Recorder r(out, "example4");
  const std::uint64_t qs[] = {2, 3, 5, 7, 11, 13};
  for (std::uint64_t pv : {2, 3, 5}) {
    const BigInt pz(static_cast<unsigned long>(pv));
    const IntPolynomial q1(std::vector<BigInt>{1, pz});
    const IntPolynomial q2(std::vector<BigInt>{1, pz + 1});
    const IntPolynomial a = q1 * q1 * q2;
    const Factor f[] = {{q1, 2}, {q2, 1}};
    std::vector<std::uint64_t> hensel;
    for (std::uint64_t qv : qs)
      if (classify_prime(a, Prime(qv)).verdict == Verdict::hensel) hensel.push_back(qv);
    r.check("Hensel primes of A_" + ulong_text(pv) + " up to 13", "[" + ulong_text(pv) + "]", list_text(hensel));
    for (std::uint64_t qv : qs) {
      const Prime q(qv);
      const std::string actual = [&] {
        try {
          return (composite_slope(f, q, opts.depth_cap) * ExactRational(BigInt(static_cast<unsigned long>(qv - 1))))
              .to_string();
        } catch (const std::exception& e) {
          return std::string("error: ") + e.what();
        }
      }();
      const std::string tag = "N_" + ulong_text(qv) + "(A_" + ulong_text(pv) + ")";
      if (qv == pv) {
        r.check(tag + " = 1", "1", actual);
        continue;
      }
      // The displayed case split sets omega = 1 when q | p+1; the derivation
      // counts solutions of (p+1)x + 1 = 0 mod q, which is 1 when q does not.
      const bool divides = (pv + 1) % qv == 0;
      r.check(tag + " = 2 + omega, omega = [q | p+1]", ulong_text(divides ? 3 : 2), actual);
      r.check(tag + " = 2 + #{x : (p+1)x + 1 = 0 mod q}", ulong_text(divides ? 2 : 3), actual);
    }
  }
}

void legendre(std::vector<Claim>& out, const ReproduceOptions&) {
  Recorder r(out, "legendre");
  const RecurrenceSpec spec = make_spec(IntPolynomial::x());
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    const ValuationSeries s = valuation_series(spec, p, 1000);
    bool ok = true;
    for (std::uint64_t n = 1; n <= 1000 && ok; ++n) ok = s.at(n) == legendre_factorial_valuation(n, p);
    r.check("nu_" + ulong_text(pv) + "(n!) = (n - s_p(n))/(p-1) for n <= 1000", "true", ok ? "true" : "false");
    r.check("nu_" + ulong_text(pv) + "(n!) ~ n/(p-1)", "1/" + ulong_text(pv - 1), predicted_slope_hensel(spec.q, p).serialize());
  }
}

}  // namespace

std::vector<Claim> reproduce(std::string_view selector, const ReproduceOptions& opts) {
  std::vector<Claim> out;
  const bool all = selector == "all";
  bool matched = all;
  auto run = [&](std::string_view name, void (*fn)(std::vector<Claim>&, const ReproduceOptions&)) {
    if (all || selector == name) {
      matched = true;
      fn(out, opts);
    }
  };
  run("example1", example1);
  run("example2", example2);
  run("example3", example3);
  run("example4", example4);
  run("legendre", legendre);
  if (!matched) throw std::invalid_argument("unknown reproduce selector '" + std::string(selector) + "'");
  return out;
}

}  // namespace padicval

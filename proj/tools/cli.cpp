#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "padicval/analysis.hpp"
#include "padicval/errors.hpp"
#include "padicval/expr.hpp"
#include "padicval/io.hpp"
#include "padicval/reproduce.hpp"

namespace padicval::cli {

namespace {

constexpr const char* kDepthCapEnv = "PADICVAL_DEPTH_CAP";

enum class Format { table, csv, json };

struct Config {
  std::string poly;
  std::vector<std::string> factors;
  std::uint64_t prime = 0;
  std::uint64_t n = 0;
  std::uint64_t n_max = 0;
  std::uint64_t residue = 0;
  std::size_t k = 0;
  std::size_t count = 0;
  unsigned depth_cap = kDefaultDepthCap;
  Format format = Format::table;
  std::string out_path;
  bool auto_shift = false;
  bool exact = false;
  bool non_hensel_only = false;
  std::string engine = "auto";
  std::string strategy = "auto";
  std::string selector = "all";
  std::size_t scan_count = 5000;
};

unsigned default_depth_cap() {
  const char* env = std::getenv(kDepthCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultDepthCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1'000'000)
    throw std::invalid_argument(std::string(kDepthCapEnv) + " must be a positive integer");
  return static_cast<unsigned>(v);
}

std::string list_text(const std::vector<std::uint64_t>& xs, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string classification_line(const PrimeClassification& c) {
  return std::to_string(c.p.value()) + " " + std::string(to_string(c.verdict)) + " roots=[" + list_text(c.roots, ",") +
         "] non_hensel=[" + list_text(c.non_hensel_roots, ",") + "]";
}

RecurrenceSpec spec_of(const Config& c) { return make_spec(parse_poly(c.poly), c.auto_shift); }

Factor parse_factor(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) return {parse_poly(text), 1};
  const std::string m = text.substr(colon + 1);
  if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos || std::stoul(m) == 0)
    throw std::invalid_argument("factor multiplicity must be a positive integer: '" + text + "'");
  return {parse_poly(text.substr(0, colon)), static_cast<unsigned>(std::stoul(m))};
}

RootOptions root_options(const Config& c) {
  RootOptions o;
  if (c.strategy == "scan") o.strategy = RootStrategy::scan;
  if (c.strategy == "gcd") o.strategy = RootStrategy::gcd;
  return o;
}

void cmd_roots(const Config& c, std::ostream& out) {
  const auto roots = roots_mod_p(parse_poly(c.poly), Prime(c.prime), root_options(c));
  switch (c.format) {
    case Format::table: out << list_text(roots) << '\n'; break;
    case Format::csv:
      out << "residue\n";
      for (auto r : roots) out << r << '\n';
      break;
    case Format::json: out << io::json{{"p", c.prime}, {"roots", roots}}.dump() << '\n'; break;
  }
}

void cmd_classify(const Config& c, std::ostream& out) {
  const auto cls = classify_prime(parse_poly(c.poly), Prime(c.prime), root_options(c));
  switch (c.format) {
    case Format::table: out << classification_line(cls) << '\n'; break;
    case Format::csv: io::write_csv(out, std::vector<ScanEntry>{{cls.p, cls}}); break;
    case Format::json: out << io::to_json(cls).dump() << '\n'; break;
  }
}

void cmd_lift(const Config& c, std::ostream& out) {
  const HenselRoot root = hensel_lift(parse_poly(c.poly), Prime(c.prime), c.residue, c.k);
  const std::string gamma = root.truncation_value(root.precision() - 1).get_str();
  switch (c.format) {
    case Format::table: out << "digits=" << list_text(root.digits()) << " gamma=" << gamma << '\n'; break;
    case Format::csv:
      out << "s,digit,gamma\n";
      for (std::size_t s = 0; s < root.precision(); ++s)
        out << s << ',' << root.digits()[s] << ',' << root.truncation_value(s).get_str() << '\n';
      break;
    case Format::json: out << io::to_json(root).dump() << '\n'; break;
  }
}

void cmd_valuation(const Config& c, std::ostream& out) {
  const RecurrenceSpec spec = spec_of(c);
  const Prime p(c.prime);
  std::uint64_t v = 0;
  if (c.engine == "direct") {
    v = valuation_tn_direct(spec, p, c.n);
  } else if (c.engine == "fast") {
    v = valuation_tn_fast(spec, p, c.n);
  } else {
    v = classify_prime(spec.q, p).verdict == Verdict::non_hensel ? valuation_tn_direct(spec, p, c.n)
                                                                  : valuation_tn_fast(spec, p, c.n);
  }
  switch (c.format) {
    case Format::table: out << v << '\n'; break;
    case Format::csv: out << "n,valuation\n" << c.n << ',' << v << '\n'; break;
    case Format::json:
      out << io::json{{"p", c.prime}, {"poly", spec.q.to_string()}, {"n0", spec.n0}, {"n", c.n}, {"valuation", v}}.dump()
          << '\n';
      break;
  }
}

void cmd_series(const Config& c, std::ostream& out) {
  const ValuationSeries s = valuation_series(spec_of(c), Prime(c.prime), c.n_max);
  switch (c.format) {
    case Format::table:
      for (std::size_t i = 0; i < s.values.size(); ++i) out << i + 1 << ' ' << s.values[i] << '\n';
      break;
    case Format::csv: io::write_csv(out, s); break;
    case Format::json: out << io::to_json(s).dump() << '\n'; break;
  }
}

void cmd_slope(const Config& c, std::ostream& out) {
  const Prime p(c.prime);
  const std::vector<std::uint64_t> checkpoints = c.n ? std::vector<std::uint64_t>{c.n} : std::vector<std::uint64_t>{};
  SlopeReport report = [&] {
    if (c.factors.empty()) return slope_report(spec_of(c), p, checkpoints, c.exact, c.depth_cap);
    std::vector<Factor> factors;
    IntPolynomial product = IntPolynomial::constant(1);
    for (const auto& f : c.factors) {
      factors.push_back(parse_factor(f));
      product *= factors.back().poly.pow(factors.back().multiplicity);
    }
    SlopeReport r = slope_report(make_spec(product, c.auto_shift), p, checkpoints, false, c.depth_cap);
    r.predicted = composite_slope(factors, p, c.depth_cap);
    r.n_p = *r.predicted * ExactRational(BigInt(static_cast<unsigned long>(p.value() - 1)));
    return r;
  }();
  const bool exact = c.exact || !c.factors.empty();
  switch (c.format) {
    case Format::table:
      if (report.predicted)
        out << (exact ? "E=" : "predicted=") << report.predicted->to_string() << " N=" << report.n_p->to_string() << '\n';
      else
        out << "predicted=none (" << to_string(report.classification.verdict) << "; use --exact)\n";
      for (const auto& [n, v] : report.empirical) out << "empirical n=" << n << " value=" << v.to_string() << '\n';
      break;
    case Format::csv: io::write_csv(out, report); break;
    case Format::json: out << io::to_json(report).dump() << '\n'; break;
  }
}

void cmd_errors(const Config& c, std::ostream& out) {
  const ErrorSeries s = error_series(spec_of(c), Prime(c.prime), c.n_max);
  switch (c.format) {
    case Format::table:
      for (std::size_t i = 0; i < s.err.size(); ++i) out << i + 1 << ' ' << s.err[i] << ' ' << s.relerr[i] << '\n';
      break;
    case Format::csv: io::write_csv(out, s); break;
    case Format::json: out << io::to_json(s).dump() << '\n'; break;
  }
}

void cmd_scan(const Config& c, std::ostream& out) {
  std::vector<ScanEntry> entries = scan_primes(parse_poly(c.poly), c.count, root_options(c));
  if (c.non_hensel_only)
    std::erase_if(entries, [](const ScanEntry& e) {
      return !e.classification || e.classification->verdict != Verdict::non_hensel;
    });
  switch (c.format) {
    case Format::table:
      for (const auto& e : entries)
        out << (e.classification ? classification_line(*e.classification) : std::to_string(e.p.value()) + " all_residues")
            << '\n';
      break;
    case Format::csv: io::write_csv(out, entries); break;
    case Format::json: {
      io::json arr = io::json::array();
      for (const auto& e : entries) arr.push_back(io::to_json(e));
      out << arr.dump() << '\n';
      break;
    }
  }
}

bool cmd_reproduce(const Config& c, std::ostream& out) {
  const std::vector<Claim> claims = reproduce(c.selector, {c.scan_count, c.depth_cap});
  std::size_t passed = 0;
  for (const auto& cl : claims) passed += cl.pass;
  switch (c.format) {
    case Format::table:
      for (const auto& cl : claims)
        out << (cl.pass ? "PASS " : "FAIL ") << cl.example << ": " << cl.description << " expected=" << cl.expected
            << " actual=" << cl.actual << '\n';
      out << passed << "/" << claims.size() << " claims passed\n";
      break;
    case Format::csv:
      out << "example,claim,expected,actual,status\n";
      for (const auto& cl : claims)
        out << cl.example << ",\"" << cl.description << "\",\"" << cl.expected << "\",\"" << cl.actual << "\","
            << (cl.pass ? "PASS" : "FAIL") << '\n';
      break;
    case Format::json: {
      io::json arr = io::json::array();
      for (const auto& cl : claims)
        arr.push_back({{"example", cl.example},
                       {"claim", cl.description},
                       {"expected", cl.expected},
                       {"actual", cl.actual},
                       {"pass", cl.pass}});
      out << io::json{{"claims", arr}, {"passed", passed}, {"total", claims.size()}}.dump() << '\n';
      break;
    }
  }
  return passed == claims.size();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  try {
    cfg.depth_cap = default_depth_cap();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"p-adic valuations of first-order recurrences t_n = Q(n) t_{n-1}"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

  auto common = [&](CLI::App* sub, bool needs_prime) {
    sub->add_option("--format", cfg.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of standard output");
    if (needs_prime) sub->add_option("--prime,-p", cfg.prime, "The prime p")->required();
  };
  auto poly_opt = [&](CLI::App* sub) {
    return sub->add_option("--poly,-q", cfg.poly, "Polynomial Q, e.g. \"x^5+2*x^3+3\"");
  };
  auto strategy_opt = [&](CLI::App* sub) {
    sub->add_option("--strategy", cfg.strategy, "Root finding: auto, scan or gcd")
        ->check(CLI::IsMember({"auto", "scan", "gcd"}));
  };
  const std::string depth_help = "Branch depth cap for the exact slope (default from " + std::string(kDepthCapEnv) +
                                 ", else " + std::to_string(kDefaultDepthCap) + ")";

  std::vector<std::pair<CLI::App*, std::function<bool(const Config&, std::ostream&)>>> commands;
  auto add = [&](CLI::App* sub, void (*fn)(const Config&, std::ostream&)) {
    commands.emplace_back(sub, [fn](const Config& c, std::ostream& o) {
      fn(c, o);
      return true;
    });
  };

  auto* roots = app.add_subcommand("roots", "Roots of Q modulo p");
  poly_opt(roots)->required();
  common(roots, true);
  strategy_opt(roots);
  add(roots, cmd_roots);

  auto* classify = app.add_subcommand("classify", "Hensel classification of p for Q");
  poly_opt(classify)->required();
  common(classify, true);
  strategy_opt(classify);
  add(classify, cmd_classify);

  auto* lift = app.add_subcommand("lift", "Hensel-lift a simple root of Q mod p");
  poly_opt(lift)->required();
  common(lift, true);
  lift->add_option("--residue,-a", cfg.residue, "Root a of Q mod p")->required();
  lift->add_option("--k", cfg.k, "Lift to k+1 digits (gamma_k mod p^(k+1))")->required();
  add(lift, cmd_lift);

  auto* valuation = app.add_subcommand("valuation", "nu_p(t_n)");
  poly_opt(valuation)->required();
  common(valuation, true);
  valuation->add_option("--n", cfg.n, "Index n")->required()->check(CLI::PositiveNumber);
  valuation->add_option("--engine", cfg.engine, "auto, direct or fast")->check(CLI::IsMember({"auto", "direct", "fast"}));
  valuation->add_flag("--auto-shift", cfg.auto_shift, "Start past the largest nonnegative integer root of Q");
  add(valuation, cmd_valuation);

  auto* series = app.add_subcommand("series", "nu_p(t_n) for n = 1..n_max");
  poly_opt(series)->required();
  common(series, true);
  series->add_option("--n-max", cfg.n_max, "Series length")->required()->check(CLI::PositiveNumber);
  series->add_flag("--auto-shift", cfg.auto_shift, "Start past the largest nonnegative integer root of Q");
  add(series, cmd_series);

  auto* slope = app.add_subcommand("slope", "Predicted, exact and empirical slopes");
  auto* slope_poly = poly_opt(slope);
  auto* slope_factor =
      slope->add_option("--factor", cfg.factors, "Factor POLY or POLY:MULT of Q (repeatable); uses the composite slope");
  slope_poly->excludes(slope_factor);
  common(slope, true);
  slope->add_flag("--exact", cfg.exact, "Exact slope via the residue-branch recursion (any prime)");
  slope->add_option("--n", cfg.n, "Also report (p-1) nu_p(t_n)/n at this n")->check(CLI::PositiveNumber);
  slope->add_option("--depth-cap", cfg.depth_cap, depth_help)->check(CLI::PositiveNumber);
  slope->add_flag("--auto-shift", cfg.auto_shift, "Start past the largest nonnegative integer root of Q");
  add(slope, cmd_slope);

  auto* errors = app.add_subcommand("errors", "Normalized and relative error series");
  poly_opt(errors)->required();
  common(errors, true);
  errors->add_option("--n-max", cfg.n_max, "Series length")->required()->check(CLI::PositiveNumber);
  errors->add_flag("--auto-shift", cfg.auto_shift, "Start past the largest nonnegative integer root of Q");
  add(errors, cmd_errors);

  auto* scan = app.add_subcommand("scan", "Classify Q at the first COUNT primes");
  poly_opt(scan)->required();
  common(scan, false);
  strategy_opt(scan);
  scan->add_option("--count", cfg.count, "Number of primes")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--non-hensel-only", cfg.non_hensel_only, "Report only non-Hensel primes");
  add(scan, cmd_scan);

  auto* repro = app.add_subcommand("reproduce", "Recompute the worked examples and report PASS/FAIL per claim");
  repro->add_option("selector", cfg.selector, "example1, example2, example3, example4, legendre or all")
      ->check(CLI::IsMember({"example1", "example2", "example3", "example4", "legendre", "all"}));
  repro->add_option("--scan-count", cfg.scan_count, "Primes scanned for the non-Hensel set")->check(CLI::PositiveNumber);
  repro->add_option("--depth-cap", cfg.depth_cap, depth_help)->check(CLI::PositiveNumber);
  common(repro, false);
  commands.emplace_back(repro, cmd_reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  if (slope->parsed() && cfg.poly.empty() && cfg.factors.empty()) {
    err << "error: slope needs --poly or --factor\n";
    return 2;
  }

  std::ostringstream buffer;
  bool ok = true;
  try {
    for (auto& [sub, fn] : commands)
      if (sub->parsed()) ok = fn(cfg, buffer);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return 2;
    }
    file << buffer.str();
  }
  return ok ? 0 : 1;
}

}  // namespace padicval::cli

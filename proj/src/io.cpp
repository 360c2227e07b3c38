#include "padicval/io.hpp"

#include <stdexcept>
#include <string>

namespace padicval::io {

namespace {

json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "no_roots") return Verdict::no_roots;
  if (s == "hensel") return Verdict::hensel;
  if (s == "non_hensel") return Verdict::non_hensel;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

}  // namespace

json to_json(const HenselRoot& root) { return {{"p", root.p().value()}, {"digits", root.digits()}}; }

json to_json(const PrimeClassification& cls) {
  return {{"p", cls.p.value()},
          {"verdict", std::string(to_string(cls.verdict))},
          {"roots", cls.roots},
          {"non_hensel_roots", cls.non_hensel_roots}};
}

json to_json(const ScanEntry& entry) {
  if (entry.classification) return to_json(*entry.classification);
  return {{"p", entry.p.value()}, {"verdict", "all_residues"}};
}

json to_json(const ValuationSeries& series) {
  return {{"p", series.p.value()}, {"poly", series.spec.q.to_string()}, {"n0", series.spec.n0}, {"values", series.values}};
}

json to_json(const ErrorSeries& series) {
  json err = json::array(), rel = json::array();
  for (const auto& v : series.err) err.push_back(big_to_json(v));
  for (const auto& v : series.relerr) rel.push_back(big_to_json(v));
  return {{"p", series.p.value()}, {"z_p", series.z_p}, {"err", err}, {"relerr", rel}};
}

json to_json(const SlopeReport& report) {
  json j = {{"p", report.p.value()}, {"classification", to_json(report.classification)}};
  j["predicted"] = report.predicted ? json(report.predicted->serialize()) : json(nullptr);
  j["N_p"] = report.n_p ? json(report.n_p->serialize()) : json(nullptr);
  json emp = json::array();
  for (const auto& [n, v] : report.empirical) emp.push_back({{"n", n}, {"value", v.serialize()}});
  j["empirical"] = emp;
  return j;
}

HenselRoot hensel_root_from_json(const json& j) {
  return HenselRoot(Prime(j.at("p").get<std::uint64_t>()), j.at("digits").get<std::vector<std::uint64_t>>());
}

PrimeClassification classification_from_json(const json& j) {
  return {Prime(j.at("p").get<std::uint64_t>()), verdict_from_string(j.at("verdict").get<std::string>()),
          j.at("roots").get<std::vector<std::uint64_t>>(), j.at("non_hensel_roots").get<std::vector<std::uint64_t>>()};
}

void write_csv(std::ostream& out, const ValuationSeries& series) {
  out << "n,valuation\n";
  for (std::size_t i = 0; i < series.values.size(); ++i) out << i + 1 << ',' << series.values[i] << '\n';
}

void write_csv(std::ostream& out, const ErrorSeries& series) {
  out << "n,err,relerr\n";
  for (std::size_t i = 0; i < series.err.size(); ++i)
    out << i + 1 << ',' << series.err[i].get_str() << ',' << series.relerr[i].get_str() << '\n';
}

void write_csv(std::ostream& out, const SlopeReport& report) {
  out << "n,empirical\n";
  for (const auto& [n, v] : report.empirical) out << n << ',' << v.serialize() << '\n';
}

void write_csv(std::ostream& out, std::span<const ScanEntry> entries) {
  out << "p,verdict,roots,non_hensel_roots\n";
  for (const auto& e : entries) {
    out << e.p.value() << ',';
    if (!e.classification) {
      out << "all_residues,,\n";
      continue;
    }
    out << to_string(e.classification->verdict) << ',' << join(e.classification->roots) << ','
        << join(e.classification->non_hensel_roots) << '\n';
  }
}

}  // namespace padicval::io

#pragma once

#include <json.hpp>

#include <ostream>
#include <span>

#include "padicval/analysis.hpp"
#include "padicval/padic.hpp"
#include "padicval/recurrence.hpp"

namespace padicval::io {

using nlohmann::json;

/// {"p": int, "digits": [beta_0, beta_1, ...]}
json to_json(const HenselRoot& root);
/// {"p", "verdict": "no_roots" | "hensel" | "non_hensel", "roots", "non_hensel_roots"}
json to_json(const PrimeClassification& cls);
/// Classification fields, or {"p", "verdict": "all_residues"}.
json to_json(const ScanEntry& entry);
/// {"p", "poly", "n0", "values"}
json to_json(const ValuationSeries& series);
/// {"p", "z_p", "err", "relerr"}
json to_json(const ErrorSeries& series);
/// Rationals as "num/den" strings.
json to_json(const SlopeReport& report);

HenselRoot hensel_root_from_json(const json& j);
PrimeClassification classification_from_json(const json& j);

/// Header "n,valuation".
void write_csv(std::ostream& out, const ValuationSeries& series);
/// Header "n,err,relerr".
void write_csv(std::ostream& out, const ErrorSeries& series);
/// Header "n,empirical"; rationals as "num/den".
void write_csv(std::ostream& out, const SlopeReport& report);
/// Header "p,verdict,roots,non_hensel_roots"; root lists space-separated.
void write_csv(std::ostream& out, std::span<const ScanEntry> entries);

}  // namespace padicval::io

// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/spectrum.hpp"

namespace ordcalc {

std::string_view to_string(ChainClass c) {
  switch (c) {
    case ChainClass::FiniteChain: return "FINITE_CHAIN";
    case ChainClass::NonScattered: return "NON_SCATTERED";
    case ChainClass::ScatteredFiniteRank: return "SCATTERED_FINITE_RANK";
    case ChainClass::ScatteredInfiniteRank: return "SCATTERED_INFINITE_RANK";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "TRUE";
    case Verdict::False: return "FALSE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

SpectrumReport classify(const Term& t) {
  Term n = normalize(t);
  SpectrumReport r;
  if (contains_eta(n)) {
    r.chain_class = ChainClass::NonScattered;
    r.spectrum_finite = Verdict::True;
    r.justification = "non-scattered chain: finite big Ramsey degrees (Galvin, Laver, Devlin)";
    return r;
  }
  r.rank = hausdorff_rank(n);
  if (is_finite(n)) {
    r.chain_class = ChainClass::FiniteChain;
    r.spectrum_finite = Verdict::True;
    r.justification = "finite chain: degenerate case, every degree is trivially finite";
  } else if (r.rank->is_infinite()) {
    r.chain_class = ChainClass::ScatteredInfiniteRank;
    r.spectrum_finite = Verdict::False;
    r.justification = "scattered chain of infinite Hausdorff rank: spectrum is not finite";
  } else {
    r.chain_class = ChainClass::ScatteredFiniteRank;
    r.spectrum_finite = Verdict::True;
    r.justification = "scattered chain of finite Hausdorff rank: spectrum is finite";
  }
  return r;
}

SpectrumReport classify_chainable(const Term& chain) {
  SpectrumReport r = classify(chain);
  if (r.chain_class == ChainClass::ScatteredInfiniteRank) {
    r.spectrum_finite = Verdict::Unknown;
    r.justification = "open problem: monomorphic structure chained by a scattered chain of infinite rank";
  } else {
    r.justification = "chainable by a " + r.justification;
  }
  return r;
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json j;
  j["chain_class"] = to_string(report.chain_class);
  if (report.rank) {
    if (report.rank->is_infinite()) j["rank"] = "INFINITE";
    else j["rank"] = report.rank->value();
  } else {
    j["rank"] = nullptr;
  }
  j["spectrum_finite"] = to_string(report.spectrum_finite);
  j["justification"] = report.justification;
  return j;
}

std::string render_text(const SpectrumReport& report) {
  std::string out = std::string(to_string(report.chain_class));
  if (report.rank) out += " rank=" + report.rank->to_string();
  out += " spectrum_finite=" + std::string(to_string(report.spectrum_finite));
  out += " (" + report.justification + ")";
  return out;
}

}  // namespace ordcalc

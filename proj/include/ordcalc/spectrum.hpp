// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ordcalc/rank.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

enum class ChainClass { FiniteChain, NonScattered, ScatteredFiniteRank, ScatteredInfiniteRank };

enum class Verdict { True, False, Unknown };

std::string_view to_string(ChainClass c);
std::string_view to_string(Verdict v);

/// Finiteness status of the big Ramsey spectrum of a chain. Degree values
/// themselves are not computed.
struct SpectrumReport {
  ChainClass chain_class = ChainClass::FiniteChain;
  std::optional<Rank> rank;
  Verdict spectrum_finite = Verdict::True;
  std::string justification;
};

/// Spectrum of the chain itself: finite iff non-scattered or of finite
/// Hausdorff rank. Finite chains get a separate degenerate class.
SpectrumReport classify(const Term& t);

/// Spectrum of a countable monomorphic structure chained by `chain`. Same as
/// classify, except that infinite-rank chains give UNKNOWN (unresolved case).
SpectrumReport classify_chainable(const Term& chain);

nlohmann::json to_json(const SpectrumReport& report);
std::string render_text(const SpectrumReport& report);

}  // namespace ordcalc

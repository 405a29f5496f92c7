// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

/// One level of a cut position: which summand (or block element) was entered,
/// how many whole block periods precede it, and the split offset inside an atom.
struct CutStep {
  std::size_t summand = 0;
  std::uint64_t unroll = 0;
  std::uint64_t offset = 0;
  bool operator==(const CutStep&) const = default;
};

/// A split t = left + right; `witness` is the path from the root to the split.
struct Cut {
  Term left;
  Term right;
  std::vector<CutStep> witness;
};

/// Canonical cut shapes of a normalized term. Periodic sums contribute cuts
/// inside their first `max_unroll + 1` periods; the right side of a cut in a
/// forward periodic sum is independent of the period it falls in.
std::vector<Cut> cuts(const Term& t, std::uint64_t max_unroll = 1);

/// Decides order embeddability between terms.
///
/// A list of summands embeds into a sum of targets by greedy left-to-right
/// matching: every infinite summand is indecomposable (if it embeds into a
/// finite sum it embeds into one summand), so only finite runs ever straddle
/// two targets, and consuming the longest embeddable prefix is optimal.
///
/// Into a forward periodic sum P = w[c1..ck] a list embeds either boundedly
/// (into finitely many periods, decided by simulating passes over the block)
/// or cofinally, which requires the last summand to be a forward periodic
/// sum Q = w[D] with the remaining prefix and D both bounded in P. Backward
/// targets are handled on reverses.
///
/// Results are memoized; the cache is shared between threads and never
/// changes an answer.
class EmbedEngine {
 public:
  bool embeds(const Term& a, const Term& b);
  bool equimorphic(const Term& a, const Term& b) { return embeds(a, b) && embeds(b, a); }

  std::size_t cache_size() const;
  void clear();

 private:
  using Items = std::vector<Term>;
  struct Pos {
    std::size_t item = 0;
    std::uint64_t used = 0;
    auto operator<=>(const Pos&) const = default;
  };

  bool into_list(const Items& a, const Items& targets);
  bool into_item(const Items& a, const Term& target);
  bool into_item_uncached(const Items& a, const Term& target);
  bool bounded(const Items& a, const Term& target);
  Pos advance(const Items& a, Pos from, const Term& target);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> cache_;
};

/// Process-wide engine used by the free functions below.
EmbedEngine& default_engine();

bool embeds(const Term& a, const Term& b);
bool equimorphic(const Term& a, const Term& b);

}  // namespace ordcalc

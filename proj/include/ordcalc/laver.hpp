// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordcalc/term.hpp"

namespace ordcalc {

enum class Execution { Serial, Parallel };

/// Where a representative came from: carried over from the previous level, or
/// the periodic sum over `subset` (indices into the previous level's reps).
struct Provenance {
  bool inherited = false;
  std::vector<std::size_t> subset;
  Direction direction = Direction::Fwd;
};

/// One level of Laver's hierarchy of indecomposable scattered types, as a set
/// of pairwise non-equimorphic representatives.
struct RepSet {
  std::uint64_t level = 0;
  std::vector<Term> reps;
  std::vector<Provenance> provenance;
};

struct BoundReport {
  std::uint64_t t_prev = 0;     // representatives at level - 1
  std::uint64_t bound = 0;      // 2 * (2^t_prev - 1)
  std::uint64_t new_count = 0;  // representatives first appearing at level
  std::uint64_t total = 0;      // representatives at level, inherited included
  bool pass = false;
};

inline constexpr std::uint64_t kDefaultRankCeiling = 3;

/// w[...] or w*[...] over the elements of `set`, sorted by rendered text.
Term periodic_normal_form(std::span<const Term> set, Direction direction);

/// A_0 = {1}.
RepSet laver_seed();

/// Next level: previous reps plus periodic sums over every nonempty subset in
/// both directions, deduplicated up to equimorphy. The first candidate of each
/// equimorphy class (inherited reps first, then subsets by bitmask, forward
/// before backward) is kept. Serial and parallel runs return identical sets.
RepSet laver_step(const RepSet& prev, Execution exec = Execution::Parallel);

/// Indices of candidates kept by equimorphy deduplication, first-wins.
std::vector<std::size_t> dedup_serial(std::span<const Term> candidates);
std::vector<std::size_t> dedup_parallel(std::span<const Term> candidates);

/// [A_0, ..., A_max_rank]. Throws E_RANK_CEILING if max_rank > ceiling.
std::vector<RepSet> enumerate_reps(std::uint64_t max_rank,
                                   std::uint64_t ceiling = kDefaultRankCeiling,
                                   Execution exec = Execution::Parallel);

/// Counting-bound check between level - 1 and level. Throws E_BAD_LEVEL for 0.
BoundReport verify_bound(std::uint64_t level, std::uint64_t ceiling = kDefaultRankCeiling);
BoundReport bound_report(const RepSet& prev, const RepSet& next);

/// Is prefix + (periodic sum of cycle) equimorphic to the normal form over U?
/// For the backward direction the prefix sits at the right-hand (finite) end.
/// Throws E_PRECONDITION unless every element of prefix and cycle is
/// equimorphic to a member of U and every member of U occurs in the cycle.
bool check_periodic_lemma(std::span<const Term> set, std::span<const Term> prefix,
                          std::span<const Term> cycle, Direction direction);

/// [{level, reps, new_count, bound, pass}, ...]
nlohmann::json census_json(std::span<const RepSet> levels);

}  // namespace ordcalc

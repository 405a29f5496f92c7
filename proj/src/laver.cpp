// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/laver.hpp"

#include <algorithm>
#include <limits>

#include "ordcalc/embed.hpp"
#include "ordcalc/rank.hpp"

namespace ordcalc {

Term periodic_normal_form(std::span<const Term> set, Direction direction) {
  if (set.empty()) throw TermError(ErrorCode::EmptySet, "periodic normal form of an empty set");
  std::vector<std::pair<std::string, Term>> keyed;
  for (const auto& t : set) {
    Term n = normalize(t);
    keyed.emplace_back(render(n), n);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Term> block;
  for (auto& [_, t] : keyed) block.push_back(std::move(t));
  return normalize(Term::periodic(direction, std::move(block)));
}

RepSet laver_seed() { return {0, {Term::one()}, {Provenance{true, {}, Direction::Fwd}}}; }

std::vector<std::size_t> dedup_serial(std::span<const Term> candidates) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool fresh = std::none_of(kept.begin(), kept.end(), [&](std::size_t j) {
      return equimorphic(candidates[j], candidates[i]);
    });
    if (fresh) kept.push_back(i);
  }
  return kept;
}

// A candidate survives iff no earlier candidate is equimorphic to it; by
// transitivity this is the serial first-wins rule. Rank is an equimorphy
// invariant and prunes most pairs.
std::vector<std::size_t> dedup_parallel(std::span<const Term> candidates) {
  const auto n = static_cast<std::int64_t>(candidates.size());
  std::vector<Rank> ranks(candidates.size(), Rank::finite(0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) ranks[i] = hausdorff_rank(candidates[i]);

  std::vector<char> duplicate(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < i; ++j) {
      if (ranks[j] == ranks[i] && equimorphic(candidates[j], candidates[i])) {
        duplicate[i] = 1;
        break;
      }
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!duplicate[i]) kept.push_back(i);
  return kept;
}

RepSet laver_step(const RepSet& prev, Execution exec) {
  const std::size_t t = prev.reps.size();
  if (t >= 20) throw TermError(ErrorCode::RankCeiling, "too many representatives to enumerate subsets");

  std::vector<Term> candidates = prev.reps;
  std::vector<Provenance> provenance(prev.reps.size(), Provenance{true, {}, Direction::Fwd});
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
    std::vector<Term> subset;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < t; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(prev.reps[i]);
        indices.push_back(i);
      }
    }
    for (Direction d : {Direction::Fwd, Direction::Back}) {
      candidates.push_back(periodic_normal_form(subset, d));
      provenance.push_back({false, indices, d});
    }
  }

  auto kept = exec == Execution::Serial ? dedup_serial(candidates) : dedup_parallel(candidates);
  RepSet next;
  next.level = prev.level + 1;
  for (std::size_t i : kept) {
    next.reps.push_back(candidates[i]);
    next.provenance.push_back(provenance[i]);
  }
  return next;
}

std::vector<RepSet> enumerate_reps(std::uint64_t max_rank, std::uint64_t ceiling, Execution exec) {
  if (max_rank > ceiling)
    throw TermError(ErrorCode::RankCeiling, "level " + std::to_string(max_rank) +
                                                " exceeds the rank ceiling " + std::to_string(ceiling));
  std::vector<RepSet> levels{laver_seed()};
  while (levels.size() <= max_rank) levels.push_back(laver_step(levels.back(), exec));
  return levels;
}

BoundReport bound_report(const RepSet& prev, const RepSet& next) {
  BoundReport r;
  r.t_prev = prev.reps.size();
  r.bound = r.t_prev >= 62 ? std::numeric_limits<std::uint64_t>::max()
                           : 2 * ((std::uint64_t{1} << r.t_prev) - 1);
  r.total = next.reps.size();
  r.new_count = r.total - r.t_prev;
  r.pass = r.new_count <= r.bound;
  return r;
}

BoundReport verify_bound(std::uint64_t level, std::uint64_t ceiling) {
  if (level == 0) throw TermError(ErrorCode::BadLevel, "level 0 has no predecessor");
  auto levels = enumerate_reps(level, ceiling);
  return bound_report(levels[level - 1], levels[level]);
}

bool check_periodic_lemma(std::span<const Term> set, std::span<const Term> prefix,
                          std::span<const Term> cycle, Direction direction) {
  if (set.empty()) throw TermError(ErrorCode::EmptySet, "U must be nonempty");
  if (cycle.empty()) throw TermError(ErrorCode::Precondition, "cycle must be nonempty");
  auto represented = [&](const Term& x) {
    return std::any_of(set.begin(), set.end(), [&](const Term& u) { return equimorphic(x, u); });
  };
  for (const auto& x : prefix)
    if (!represented(x))
      throw TermError(ErrorCode::Precondition, "prefix element " + render(x) + " is not in U");
  for (const auto& x : cycle)
    if (!represented(x))
      throw TermError(ErrorCode::Precondition, "cycle element " + render(x) + " is not in U");
  for (const auto& u : set) {
    bool occurs =
        std::any_of(cycle.begin(), cycle.end(), [&](const Term& c) { return equimorphic(c, u); });
    if (!occurs)
      throw TermError(ErrorCode::Precondition,
                      render(u) + " does not occur in the cycle, so the sum is not unbounded in it");
  }

  std::vector<Term> items;
  Term tail = normalize(Term::periodic(direction, {cycle.begin(), cycle.end()}));
  if (direction == Direction::Back) items.push_back(tail);
  items.insert(items.end(), prefix.begin(), prefix.end());
  if (direction == Direction::Fwd) items.push_back(tail);
  Term realized = normalize(concat(items));
  return equimorphic(realized, periodic_normal_form(set, direction));
}

nlohmann::json census_json(std::span<const RepSet> levels) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    nlohmann::json entry;
    entry["level"] = levels[i].level;
    auto reps = nlohmann::json::array();
    for (const auto& r : levels[i].reps) reps.push_back(render(r));
    entry["reps"] = reps;
    entry["total"] = levels[i].reps.size();
    if (i == 0) {
      entry["new_count"] = levels[i].reps.size();
      entry["bound"] = nullptr;
      entry["pass"] = true;
    } else {
      auto r = bound_report(levels[i - 1], levels[i]);
      entry["new_count"] = r.new_count;
      entry["bound"] = r.bound;
      entry["pass"] = r.pass;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace ordcalc

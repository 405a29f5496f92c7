// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordcalc {

std::size_t token_count(const Term& t) {
  auto list = [](std::span<const Term> ts) {
    std::size_t n = ts.size() - 1;
    for (const auto& c : ts) n += token_count(c);
    return n;
  };
  switch (t.kind()) {
    case Kind::Sum: return list(t.children());
    case Kind::Periodic:
      if (t.children().size() == 1 && t.children().front().is(Kind::One)) return 1;
      return 3 + list(t.children());
    case Kind::Zeta:
      if (t.children().size() == 1 && t.children().front().is(Kind::One)) return 1;
      return 3 + list(t.children());
    case Kind::Rev: return 3 + token_count(t.children().front());
    default: return 1;
  }
}

std::size_t nesting_depth(const Term& t) {
  std::size_t inner = 0;
  for (const auto& c : t.children()) inner = std::max(inner, nesting_depth(c));
  return inner + (t.is(Kind::Periodic) || t.is(Kind::Zeta) ? 1 : 0);
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(const EnumOptions& o) : o_(o) {}

  const std::vector<Term>& items(std::size_t depth, std::size_t size) {
    auto key = std::make_pair(depth, size);
    if (auto it = items_.find(key); it != items_.end()) return it->second;
    std::vector<Term> out;
    if (size == 1) {
      for (std::uint64_t n = 1; n <= o_.max_numeral; ++n) out.push_back(Term::points(n));
      if (o_.eta) out.push_back(Term::eta());
      if (depth >= 1) {
        out.push_back(Term::periodic(Direction::Fwd, {Term::one()}));
        if (o_.backward) out.push_back(Term::periodic(Direction::Back, {Term::one()}));
      }
    } else if (size >= 4 && depth >= 1) {
      for (const auto& block : lists(depth - 1, size - 3)) {
        out.push_back(Term::periodic(Direction::Fwd, block));
        if (o_.backward) out.push_back(Term::periodic(Direction::Back, block));
      }
    }
    return items_[key] = std::move(out);
  }

  const std::vector<std::vector<Term>>& lists(std::size_t depth, std::size_t size) {
    auto key = std::make_pair(depth, size);
    if (auto it = lists_.find(key); it != lists_.end()) return it->second;
    std::vector<std::vector<Term>> out;
    for (std::size_t first = 1; first <= size; ++first) {
      const auto& heads = items(depth, first);
      if (heads.empty()) continue;
      if (first == size) {
        for (const auto& h : heads) out.push_back({h});
      } else if (size - first >= 2) {
        const auto& tails = lists(depth, size - first - 1);
        for (const auto& h : heads) {
          for (const auto& tail : tails) {
            std::vector<Term> l{h};
            l.insert(l.end(), tail.begin(), tail.end());
            out.push_back(std::move(l));
          }
        }
      }
    }
    return lists_[key] = std::move(out);
  }

 private:
  EnumOptions o_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> items_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Term>>> lists_;
};

}  // namespace

std::vector<Term> enumerate_terms(const EnumOptions& options) {
  Enumerator e(options);
  std::map<std::pair<std::size_t, std::string>, Term> found;
  for (std::size_t size = 1; size <= options.max_tokens; ++size) {
    for (const auto& list : e.lists(options.max_depth, size)) {
      Term n = normalize(list.size() == 1 ? list.front() : Term::sum(list));
      std::size_t tokens = token_count(n);
      if (tokens > options.max_tokens || nesting_depth(n) > options.max_depth) continue;
      found.emplace(std::make_pair(tokens, render(n)), n);
    }
  }
  std::vector<Term> out;
  out.reserve(found.size());
  for (auto& [_, t] : found) out.push_back(t);
  return out;
}

namespace {

Term random_item(std::mt19937_64& rng, const RandomOptions& o, std::size_t depth, bool sugar);

std::vector<Term> random_list(std::mt19937_64& rng, const RandomOptions& o, std::size_t depth,
                              bool sugar) {
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, o.max_items));
  std::vector<Term> out(len(rng));
  for (auto& t : out) t = random_item(rng, o, depth, sugar);
  return out;
}

Term random_item(std::mt19937_64& rng, const RandomOptions& o, std::size_t depth, bool sugar) {
  std::uniform_int_distribution<int> pick(0, 9);
  int roll = pick(rng);
  if (depth == 0 || roll < 3) {
    if (o.eta && pick(rng) == 0) return Term::eta();
    if (sugar && pick(rng) == 0) return Term::zero();
    std::uniform_int_distribution<std::uint64_t> n(1, std::max<std::uint64_t>(1, o.max_numeral));
    return Term::points(n(rng));
  }
  auto block = random_list(rng, o, depth - 1, sugar);
  if (sugar && roll == 9) return Term::zeta(std::move(block));
  if (sugar && roll == 8) {
    auto inner = random_list(rng, o, depth - 1, sugar);
    return Term::rev(inner.size() == 1 ? inner.front() : Term::sum(std::move(inner)));
  }
  Direction d = o.backward && (roll & 1) ? Direction::Back : Direction::Fwd;
  return Term::periodic(d, std::move(block));
}

}  // namespace

Term random_term(std::mt19937_64& rng, const RandomOptions& options) {
  auto items = random_list(rng, options, options.max_depth, false);
  return normalize(items.size() == 1 ? items.front() : Term::sum(std::move(items)));
}

Term random_sugared_term(std::mt19937_64& rng, const RandomOptions& options) {
  auto items = random_list(rng, options, options.max_depth, true);
  return items.size() == 1 ? items.front() : Term::sum(std::move(items));
}

}  // namespace ordcalc

// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/embed.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace ordcalc {

namespace {

using Items = std::vector<Term>;

Items as_list(const Term& t) { return summands(normalize(t)); }

Items reversed(const Items& items) { return summands(reverse(concat(items))); }

bool all_finite(const Items& items) {
  return std::all_of(items.begin(), items.end(), [](const Term& t) { return t.is_finite_atom(); });
}

std::uint64_t mass(const Items& items) {
  std::uint64_t n = 0;
  for (const auto& t : items) n += t.count();
  return n;
}

// Accepts exactly the lists whose order type is at most w^w: well-ordered
// and either w^w-free or ending in the single w^w summand.
bool below_wpow(const Items& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].is(Kind::WPow)) {
      if (i + 1 != items.size()) return false;
      continue;
    }
    if (!well_ordered(items[i]) || contains_wpow(items[i])) return false;
  }
  return true;
}

std::string key_of(const Items& a, const Term& target) {
  return render(concat(a)) + '|' + render(target);
}

}  // namespace

bool EmbedEngine::embeds(const Term& a, const Term& b) {
  return into_list(as_list(a), as_list(b));
}

std::size_t EmbedEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void EmbedEngine::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

bool EmbedEngine::into_list(const Items& a, const Items& targets) {
  Pos p;
  const Pos end{a.size(), 0};
  for (const auto& b : targets) {
    if (p == end) break;
    p = advance(a, p, b);
  }
  return p == end;
}

// Longest prefix a[from..q) that embeds into `target`. Prefix embeddability
// is monotone, so both searches below are binary.
EmbedEngine::Pos EmbedEngine::advance(const Items& a, Pos from, const Term& target) {
  auto slice = [&](Pos to) {
    Items out;
    for (std::size_t i = from.item; i < a.size() && i <= to.item; ++i) {
      const Term& t = a[i];
      std::uint64_t lo = i == from.item ? from.used : 0;
      if (i == to.item) {
        if (to.used > lo) out.push_back(Term::points(to.used - lo));
        break;
      }
      out.push_back(lo > 0 ? Term::points(t.count() - lo) : t);
    }
    return summands(concat(out));
  };

  Pos best = from;
  std::size_t lo = from.item + 1, hi = a.size();
  while (lo <= hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (into_item(slice({mid, 0}), target)) {
      best = {mid, 0};
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  if (best.item < a.size() && a[best.item].is(Kind::Fin)) {
    std::uint64_t base = best == from ? from.used : 0;
    std::uint64_t l = base + 1, h = a[best.item].count() - 1;
    while (l <= h) {
      std::uint64_t mid = l + (h - l) / 2;
      if (into_item(slice({best.item, mid}), target)) {
        best = {best.item, mid};
        l = mid + 1;
      } else {
        h = mid - 1;
      }
    }
  }
  return best;
}

bool EmbedEngine::into_item(const Items& a, const Term& target) {
  if (a.empty()) return true;
  std::string key = key_of(a, target);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  bool result = into_item_uncached(a, target);
  std::unique_lock lock(mutex_);
  cache_.emplace(std::move(key), result);
  return result;
}

bool EmbedEngine::into_item_uncached(const Items& a, const Term& target) {
  if (contains_eta(target)) return true;
  if (std::any_of(a.begin(), a.end(), [](const Term& t) { return contains_eta(t); }))
    return false;
  switch (target.kind()) {
    case Kind::Zero: return false;
    case Kind::One:
    case Kind::Fin: return all_finite(a) && mass(a) <= target.count();
    case Kind::WPow: return below_wpow(a);
    case Kind::WPowRev: return below_wpow(reversed(a));
    default: break;
  }
  if (std::any_of(a.begin(), a.end(), [](const Term& t) { return contains_wpow(t); }))
    return false;
  if (target.direction() == Direction::Back) return into_item(reversed(a), reverse(target));

  if (bounded(a, target)) return true;
  // Cofinal image: only a trailing forward periodic summand can be unbounded.
  const Term& last = a.back();
  if (!last.is(Kind::Periodic) || last.direction() != Direction::Fwd) return false;
  Items prefix(a.begin(), a.end() - 1);
  Items block(last.children().begin(), last.children().end());
  return bounded(prefix, target) && bounded(block, target);
}

// Does `a` embed into finitely many periods of the forward periodic target?
bool EmbedEngine::bounded(const Items& a, const Term& target) {
  const Pos end{a.size(), 0};
  Pos p;
  while (p != end) {
    Pos q = p;
    for (const auto& c : target.children()) {
      q = advance(a, q, c);
      if (q == end) return true;
    }
    if (q == p) return false;
    if (q.item == p.item) {
      // Only a finite run advanced, so every block element is finite and each
      // further period consumes the same number of points.
      std::uint64_t step = q.used - p.used;
      std::uint64_t remaining = a[q.item].count() - q.used;
      q.used += (remaining - 1) / step * step;
    }
    p = q;
  }
  return true;
}

EmbedEngine& default_engine() {
  static EmbedEngine engine;
  return engine;
}

bool embeds(const Term& a, const Term& b) { return default_engine().embeds(a, b); }

bool equimorphic(const Term& a, const Term& b) { return default_engine().equimorphic(a, b); }

// ---------------------------------------------------------------------------
// Cuts

namespace {

struct Split {
  Items left;
  Items right;
  std::vector<CutStep> path;
};

std::vector<Split> item_cuts(const Term& t, std::uint64_t max_unroll);

Items repeat(std::span<const Term> block, std::uint64_t times) {
  Items out;
  for (std::uint64_t r = 0; r < times; ++r) out.insert(out.end(), block.begin(), block.end());
  return out;
}

std::vector<Split> item_cuts(const Term& t, std::uint64_t max_unroll) {
  std::vector<Split> out;
  auto add = [&](Items l, Items r, std::vector<CutStep> path) {
    out.push_back({std::move(l), std::move(r), std::move(path)});
  };
  switch (t.kind()) {
    case Kind::Zero: add({}, {}, {{0, 0, 0}}); break;
    case Kind::One:
    case Kind::Fin:
      for (std::uint64_t k = 0; k <= t.count(); ++k)
        add({Term::points(k)}, {Term::points(t.count() - k)}, {{0, 0, k}});
      break;
    case Kind::Eta: {
      const Term e = Term::eta(), one = Term::one();
      add({}, {e}, {{0, 0, 0}});
      add({e}, {e}, {{0, 0, 1}});
      add({e, one}, {e}, {{0, 0, 2}});
      add({e}, {one, e}, {{0, 0, 3}});
      add({e}, {}, {{0, 0, 4}});
      break;
    }
    case Kind::WPow:
    case Kind::WPowRev:
      add({}, {t}, {{0, 0, 0}});
      add({t}, {}, {{0, 0, 1}});
      break;
    case Kind::Periodic: {
      auto block = t.children();
      const bool fwd = t.direction() == Direction::Fwd;
      add({}, {t}, {{0, 0, 0}});
      for (std::uint64_t r = 0; r <= max_unroll; ++r) {
        for (std::size_t j = 0; j < block.size(); ++j) {
          for (auto& inner : item_cuts(block[j], max_unroll)) {
            Items left, right;
            if (fwd) {
              left = repeat(block, r);
              left.insert(left.end(), block.begin(), block.begin() + j);
              left.insert(left.end(), inner.left.begin(), inner.left.end());
              right = inner.right;
              right.insert(right.end(), block.begin() + j + 1, block.end());
              right.push_back(t);
            } else {
              left.push_back(t);
              left.insert(left.end(), block.begin(), block.begin() + j);
              left.insert(left.end(), inner.left.begin(), inner.left.end());
              right = inner.right;
              right.insert(right.end(), block.begin() + j + 1, block.end());
              auto tail = repeat(block, r);
              right.insert(right.end(), tail.begin(), tail.end());
            }
            std::vector<CutStep> path{{j, r, 0}};
            path.insert(path.end(), inner.path.begin(), inner.path.end());
            add(std::move(left), std::move(right), std::move(path));
          }
        }
      }
      add({t}, {}, {{block.size(), 0, 0}});
      break;
    }
    default: add({}, {t}, {{0, 0, 0}}); break;
  }
  return out;
}

}  // namespace

std::vector<Cut> cuts(const Term& t, std::uint64_t max_unroll) {
  Items items = as_list(t);
  std::vector<Cut> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto emit = [&](Items left, Items right, std::vector<CutStep> path) {
    Term l = concat(left), r = concat(right);
    if (!seen.emplace(render(l), render(r)).second) return;
    out.push_back({std::move(l), std::move(r), std::move(path)});
  };
  if (items.empty()) emit({}, {}, {});
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (auto& inner : item_cuts(items[i], max_unroll)) {
      Items left(items.begin(), items.begin() + i);
      left.insert(left.end(), inner.left.begin(), inner.left.end());
      Items right = inner.right;
      right.insert(right.end(), items.begin() + i + 1, items.end());
      std::vector<CutStep> path{{i, 0, 0}};
      path.insert(path.end(), inner.path.begin(), inner.path.end());
      emit(std::move(left), std::move(right), std::move(path));
    }
  }
  return out;
}

}  // namespace ordcalc

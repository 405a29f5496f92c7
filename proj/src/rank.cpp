// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/rank.hpp"

#include <stdexcept>

namespace ordcalc {

namespace {

using Items = std::vector<Term>;

// A condensation class is finite, w, w* or zeta; two adjacent classes fuse
// when the left one has a maximum and the right one a minimum.
struct ClassShape {
  bool has_min = true;
  bool has_max = true;
};

struct Condensed {
  Items quotient;
  std::optional<ClassShape> first;  // set iff the quotient has a least point
  std::optional<ClassShape> last;   // set iff the quotient has a greatest point
};

bool single_point(const Items& q) { return q.size() == 1 && q.front().is(Kind::One); }

Items drop_first(const Items& q) {
  if (q.empty()) throw std::logic_error("drop_first on empty chain");
  const Term& head = q.front();
  Items out;
  switch (head.kind()) {
    case Kind::One: break;
    case Kind::Fin: out.push_back(Term::points(head.count() - 1)); break;
    case Kind::Periodic: {
      if (head.direction() == Direction::Back) throw std::logic_error("no least point");
      Items block(head.children().begin(), head.children().end());
      out = drop_first(block);
      out.push_back(head);
      break;
    }
    default: throw std::logic_error("no least point");
  }
  out.insert(out.end(), q.begin() + 1, q.end());
  return summands(concat(out));
}

Items drop_last(const Items& q) {
  return summands(reverse(concat(drop_first(summands(reverse(concat(q)))))));
}

ClassShape mirror(ClassShape s) { return {s.has_max, s.has_min}; }

Condensed condense_list(const Items& items);

Condensed condense_item(const Term& t) {
  switch (t.kind()) {
    case Kind::One:
    case Kind::Fin: return {{Term::one()}, ClassShape{}, ClassShape{}};
    case Kind::Periodic: break;
    default: throw std::logic_error("condense: unsupported atom");
  }
  if (t.direction() == Direction::Back) {
    Condensed c = condense_item(reverse(t));
    Condensed out;
    out.quotient = summands(reverse(concat(c.quotient)));
    if (c.last) out.first = mirror(*c.last);
    if (c.first) out.last = mirror(*c.first);
    return out;
  }
  Condensed block = condense_list({t.children().begin(), t.children().end()});
  const bool fuse = block.first && block.last && block.last->has_max && block.first->has_min;
  if (fuse && single_point(block.quotient)) {
    // The whole sum is one class of type w.
    ClassShape w{true, false};
    return {{Term::one()}, w, w};
  }
  Condensed out;
  out.first = block.first;
  if (fuse) {
    Items middle = drop_first(drop_last(block.quotient));
    middle.push_back(Term::one());
    out.quotient = summands(concat({Term::one(), normalize(Term::periodic(Direction::Fwd, middle))}));
  } else {
    out.quotient = summands(normalize(Term::periodic(Direction::Fwd, block.quotient)));
  }
  return out;
}

Condensed condense_list(const Items& items) {
  Condensed acc;
  for (const auto& item : items) {
    Condensed c = condense_item(item);
    if (acc.quotient.empty()) {
      acc = std::move(c);
      continue;
    }
    if (acc.last && c.first && acc.last->has_max && c.first->has_min) {
      ClassShape fused{acc.last->has_min, c.first->has_max};
      Items q = drop_last(acc.quotient);
      q.push_back(Term::one());
      Items rest = drop_first(c.quotient);
      q.insert(q.end(), rest.begin(), rest.end());
      if (single_point(acc.quotient)) acc.first = fused;
      acc.last = single_point(c.quotient) ? std::optional<ClassShape>(fused) : c.last;
      acc.quotient = summands(concat(q));
    } else {
      acc.quotient.insert(acc.quotient.end(), c.quotient.begin(), c.quotient.end());
      acc.quotient = summands(concat(acc.quotient));
      acc.last = c.last;
    }
  }
  return acc;
}

void require_scattered(const Term& t) {
  if (contains_eta(t)) throw TermError(ErrorCode::EtaTerm, "rank is defined only for scattered chains");
}

}  // namespace

Term condense(const Term& t) {
  Term n = normalize(t);
  require_scattered(n);
  if (contains_wpow(n)) throw TermError(ErrorCode::InfiniteRankAtom, "w^w has no finite condensation");
  return concat(condense_list(summands(n)).quotient);
}

bool hierarchy_member(const Term& t, std::uint64_t alpha) {
  Term cur = normalize(t);
  require_scattered(cur);
  if (contains_wpow(cur)) throw TermError(ErrorCode::InfiniteRankAtom, "w^w lies in no finite level");
  for (std::uint64_t i = 0; i < alpha; ++i) {
    if (cur.is(Kind::Zero) || cur.is(Kind::One)) return true;
    cur = condense(cur);
  }
  return cur.is(Kind::Zero) || cur.is(Kind::One);
}

Rank hausdorff_rank(const Term& t) {
  Term cur = normalize(t);
  require_scattered(cur);
  if (contains_wpow(cur)) return Rank::infinite();
  std::uint64_t r = 0;
  while (!cur.is(Kind::Zero) && !cur.is(Kind::One)) {
    cur = condense(cur);
    ++r;
  }
  return Rank::finite(r);
}

}  // namespace ordcalc

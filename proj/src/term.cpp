// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/term.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace ordcalc {

struct Term::Node {
  Kind kind = Kind::Zero;
  std::uint64_t count = 0;
  Direction direction = Direction::Fwd;
  std::vector<Term> children;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term() : Term(zero()) {}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

std::shared_ptr<const Term::Node> make_node(Kind kind, std::uint64_t count, Direction dir,
                                            std::vector<Term> children);

}  // namespace

// Leaf singletons are shared; everything else allocates.
Term Term::zero() {
  static const Term t{make_node(Kind::Zero, 0, Direction::Fwd, {})};
  return t;
}

Term Term::one() {
  static const Term t{make_node(Kind::One, 1, Direction::Fwd, {})};
  return t;
}

Term Term::fin(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("Term::fin requires n >= 2");
  return Term{make_node(Kind::Fin, n, Direction::Fwd, {})};
}

Term Term::points(std::uint64_t n) {
  if (n == 0) return zero();
  if (n == 1) return one();
  return fin(n);
}

Term Term::sum(std::vector<Term> parts) {
  if (parts.size() < 2) throw std::invalid_argument("Term::sum requires at least two parts");
  return Term{make_node(Kind::Sum, 0, Direction::Fwd, std::move(parts))};
}

Term Term::periodic(Direction direction, std::vector<Term> block) {
  if (block.empty()) throw TermError(ErrorCode::EmptyBlock, "periodic block must be nonempty");
  return Term{make_node(Kind::Periodic, 0, direction, std::move(block))};
}

Term Term::eta() {
  static const Term t{make_node(Kind::Eta, 0, Direction::Fwd, {})};
  return t;
}

Term Term::wpow() {
  static const Term t{make_node(Kind::WPow, 0, Direction::Fwd, {})};
  return t;
}

Term Term::wpow_rev() {
  static const Term t{make_node(Kind::WPowRev, 0, Direction::Back, {})};
  return t;
}

Term Term::rev(Term inner) {
  return Term{make_node(Kind::Rev, 0, Direction::Fwd, {std::move(inner)})};
}

Term Term::zeta(std::vector<Term> block) {
  if (block.empty()) throw TermError(ErrorCode::EmptyBlock, "zeta block must be nonempty");
  return Term{make_node(Kind::Zeta, 0, Direction::Fwd, std::move(block))};
}

namespace {

std::shared_ptr<const Term::Node> make_node(Kind kind, std::uint64_t count, Direction dir,
                                            std::vector<Term> children) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->count = count;
  n->direction = dir;
  std::size_t h = mix(static_cast<std::size_t>(kind) + 1, count);
  h = mix(h, static_cast<std::size_t>(dir));
  for (const auto& c : children) h = mix(h, c.hash());
  n->hash = h;
  n->children = std::move(children);
  return n;
}

}  // namespace

Kind Term::kind() const noexcept { return node_->kind; }
std::uint64_t Term::count() const noexcept { return node_->count; }
Direction Term::direction() const noexcept { return node_->direction; }
std::span<const Term> Term::children() const noexcept { return node_->children; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.count <=> y.count; c != 0) return c;
  if (auto c = x.direction <=> y.direction; c != 0) return c;
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorCode code = ErrorCode::Syntax) const {
    throw TermError(code, "at " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', got end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  Term parse_sum() {
    std::vector<Term> parts;
    parts.push_back(parse_item());
    while (accept('+')) parts.push_back(parse_item());
    if (parts.size() == 1) return parts.front();
    return Term::sum(std::move(parts));
  }

  std::vector<Term> parse_block() {
    std::size_t open = pos_;
    expect('[');
    if (peek(']')) {
      pos_ = open;
      fail("empty block", ErrorCode::EmptyBlock);
    }
    std::vector<Term> block;
    block.push_back(parse_sum());
    while (accept(',')) block.push_back(parse_sum());
    expect(']');
    return block;
  }

  Term parse_nat() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (digits == "0") return Term::zero();
    if (digits.front() == '0') {
      pos_ = start;
      fail("numeral with leading zero", ErrorCode::BadNat);
    }
    std::uint64_t n = 0;
    for (char c : digits) {
      auto d = static_cast<std::uint64_t>(c - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        pos_ = start;
        fail("numeral out of range");
      }
      n = n * 10 + d;
    }
    return Term::points(n);
  }

  Term parse_item() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected a term, got end of input");
    char c = text_[pos_];
    if (c >= '0' && c <= '9') return parse_nat();
    if (accept_word("eta")) return Term::eta();
    if (accept_word("rev")) {
      expect('(');
      Term inner = parse_sum();
      expect(')');
      return Term::rev(std::move(inner));
    }
    if (c == 'z') {
      ++pos_;
      if (peek('[')) return Term::zeta(parse_block());
      return Term::zeta({Term::one()});
    }
    if (c == 'w') {
      ++pos_;
      if (accept('^')) {
        if (!accept('w')) fail("expected 'w' after '^'");
        return accept('*') ? Term::wpow_rev() : Term::wpow();
      }
      Direction dir = accept('*') ? Direction::Back : Direction::Fwd;
      if (peek('[')) return Term::periodic(dir, parse_block());
      return Term::periodic(dir, {Term::one()});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_text(const Term& t, std::string& out) {
  auto join = [&](std::span<const Term> ts, char sep) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) out += sep;
      render_text(ts[i], out);
    }
  };
  switch (t.kind()) {
    case Kind::Zero: out += '0'; break;
    case Kind::One: out += '1'; break;
    case Kind::Fin: out += std::to_string(t.count()); break;
    case Kind::Sum: join(t.children(), '+'); break;
    case Kind::Periodic:
      out += t.direction() == Direction::Fwd ? "w[" : "w*[";
      join(t.children(), ',');
      out += ']';
      break;
    case Kind::Eta: out += "eta"; break;
    case Kind::WPow: out += "w^w"; break;
    case Kind::WPowRev: out += "w^w*"; break;
    case Kind::Rev:
      out += "rev(";
      render_text(t.children().front(), out);
      out += ')';
      break;
    case Kind::Zeta:
      out += "z[";
      join(t.children(), ',');
      out += ']';
      break;
  }
}

nlohmann::json json_list(std::span<const Term> ts) {
  auto arr = nlohmann::json::array();
  for (const auto& c : ts) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

nlohmann::json to_json(const Term& t) {
  using nlohmann::json;
  switch (t.kind()) {
    case Kind::Zero: return json{{"kind", "zero"}};
    case Kind::One: return json{{"kind", "one"}};
    case Kind::Fin: return json{{"kind", "fin"}, {"n", t.count()}};
    case Kind::Sum: return json{{"kind", "sum"}, {"parts", json_list(t.children())}};
    case Kind::Periodic:
      return json{{"kind", "periodic"},
                  {"direction", t.direction() == Direction::Fwd ? "fwd" : "back"},
                  {"block", json_list(t.children())}};
    case Kind::Eta: return json{{"kind", "eta"}};
    case Kind::WPow: return json{{"kind", "wpow"}};
    case Kind::WPowRev: return json{{"kind", "wpow_rev"}};
    case Kind::Rev: return json{{"kind", "rev"}, {"parts", json_list(t.children())}};
    case Kind::Zeta: return json{{"kind", "zeta"}, {"block", json_list(t.children())}};
  }
  return {};
}

std::string render(const Term& t, Format format) {
  if (format == Format::Json) return to_json(t).dump();
  std::string out;
  render_text(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

using Items = std::vector<Term>;

void append_item(Items& items, const Term& t) {
  switch (t.kind()) {
    case Kind::Zero: return;
    case Kind::Sum:
      for (const auto& p : t.children()) append_item(items, p);
      return;
    case Kind::One:
    case Kind::Fin:
      if (!items.empty() && items.back().is_finite_atom()) {
        items.back() = Term::points(items.back().count() + t.count());
        return;
      }
      break;
    default: break;
  }
  items.push_back(t);
}

Term from_items(Items items) {
  if (items.empty()) return Term::zero();
  if (items.size() == 1) return items.front();
  return Term::sum(std::move(items));
}

// Smallest block whose concatenated repetition equals `items` once finite runs
// are expanded to points. A finite run at the seam of two copies is the merge
// of the trailing and leading runs of the root.
Items primitive_root(const Items& items) {
  std::vector<std::uint64_t> runs(1, 0);
  Items heavy;
  for (const auto& t : items) {
    if (t.is_finite_atom()) {
      runs.back() += t.count();
    } else {
      heavy.push_back(t);
      runs.push_back(0);
    }
  }
  const std::size_t m = heavy.size();
  for (std::size_t period = 1; period < m; ++period) {
    if (m % period != 0) continue;
    const std::size_t copies = m / period;
    bool ok = true;
    for (std::size_t j = 1; j < copies && ok; ++j) {
      for (std::size_t i = 0; i < period && ok; ++i) ok = heavy[j * period + i] == heavy[i];
      for (std::size_t i = 1; i < period && ok; ++i) ok = runs[j * period + i] == runs[i];
      ok = ok && runs[j * period] == runs[0] + runs[m];
    }
    if (!ok) continue;
    Items root;
    for (std::size_t i = 0; i < period; ++i) {
      append_item(root, Term::points(runs[i]));
      root.push_back(heavy[i]);
    }
    append_item(root, Term::points(runs[m]));
    return root;
  }
  return items;
}

Items make_periodic(Direction dir, const Items& block) {
  if (block.empty()) return {};
  if (std::all_of(block.begin(), block.end(), [](const Term& t) { return t.is_finite_atom(); }))
    return {Term::periodic(dir, {Term::one()})};
  return {Term::periodic(dir, primitive_root(block))};
}

Term reverse_item(const Term& t);

Items reverse_items(const Items& items) {
  Items out;
  for (auto it = items.rbegin(); it != items.rend(); ++it) append_item(out, reverse_item(*it));
  return out;
}

Term reverse_item(const Term& t) {
  switch (t.kind()) {
    case Kind::WPow: return Term::wpow_rev();
    case Kind::WPowRev: return Term::wpow();
    case Kind::Periodic: {
      Items block(t.children().begin(), t.children().end());
      return make_periodic(flip(t.direction()), reverse_items(block)).front();
    }
    case Kind::Sum: return from_items(reverse_items(summands(t)));
    default: return t;
  }
}

Items norm_items(const Term& t, bool in_periodic) {
  switch (t.kind()) {
    case Kind::Zero: return {};
    case Kind::One:
    case Kind::Fin:
    case Kind::Eta: return {t};
    case Kind::WPow:
    case Kind::WPowRev:
      if (in_periodic)
        throw TermError(ErrorCode::UnsupportedNesting,
                        "w^w may only appear as a top-level summand");
      return {t};
    case Kind::Sum: {
      Items out;
      for (const auto& p : t.children())
        for (const auto& item : norm_items(p, in_periodic)) append_item(out, item);
      return out;
    }
    case Kind::Periodic:
    case Kind::Zeta: {
      Items block;
      for (const auto& p : t.children())
        for (const auto& item : norm_items(p, true)) append_item(block, item);
      if (t.kind() == Kind::Periodic) return make_periodic(t.direction(), block);
      Items out = make_periodic(Direction::Back, block);
      for (const auto& item : make_periodic(Direction::Fwd, block)) append_item(out, item);
      return out;
    }
    case Kind::Rev: return reverse_items(norm_items(t.children().front(), in_periodic));
  }
  return {};
}

bool has_sugar(const Term& t) {
  if (t.is(Kind::Rev) || t.is(Kind::Zeta)) return true;
  return std::any_of(t.children().begin(), t.children().end(), has_sugar);
}

const Term& plain(const Term& t, Term& storage) {
  if (!has_sugar(t)) return t;
  storage = normalize(t);
  return storage;
}

bool any_node(const Term& t, const std::function<bool(const Term&)>& pred) {
  if (pred(t)) return true;
  for (const auto& c : t.children())
    if (any_node(c, pred)) return true;
  return false;
}

}  // namespace

Term normalize(const Term& t) { return from_items(norm_items(t, false)); }

Term reverse(const Term& t) { return from_items(reverse_items(norm_items(t, false))); }

bool contains_eta(const Term& t) {
  return any_node(t, [](const Term& n) { return n.is(Kind::Eta); });
}

bool contains_wpow(const Term& t) {
  return any_node(t, [](const Term& n) { return n.is(Kind::WPow) || n.is(Kind::WPowRev); });
}

bool well_ordered(const Term& t) {
  Term storage;
  const Term& n = plain(t, storage);
  return !any_node(n, [](const Term& x) {
    return x.is(Kind::Eta) || x.is(Kind::WPowRev) ||
           (x.is(Kind::Periodic) && x.direction() == Direction::Back);
  });
}

bool is_finite(const Term& t) {
  Term storage;
  const Term& n = plain(t, storage);
  return !any_node(n, [](const Term& x) { return !x.is_finite_atom() && !x.is(Kind::Sum); });
}

std::uint64_t finite_size(const Term& t) {
  if (t.is(Kind::Sum)) {
    std::uint64_t total = 0;
    for (const auto& p : t.children()) total += finite_size(p);
    return total;
  }
  return t.is_finite_atom() ? t.count() : 0;
}

std::vector<Term> summands(const Term& t) {
  if (t.is(Kind::Zero)) return {};
  if (t.is(Kind::Sum)) return {t.children().begin(), t.children().end()};
  return {t};
}

Term concat(std::span<const Term> items) {
  Items out;
  for (const auto& t : items) append_item(out, t);
  return from_items(std::move(out));
}

Term concat(std::initializer_list<Term> items) {
  return concat(std::span<const Term>(items.begin(), items.size()));
}

}  // namespace ordcalc

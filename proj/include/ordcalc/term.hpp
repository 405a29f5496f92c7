// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordcalc/error.hpp"

namespace ordcalc {

// Rev and Zeta only occur in parsed, not-yet-normalized trees.
enum class Kind : std::uint8_t { Zero, One, Fin, Sum, Periodic, Eta, WPow, WPowRev, Rev, Zeta };

enum class Direction : std::uint8_t { Fwd, Back };

inline Direction flip(Direction d) { return d == Direction::Fwd ? Direction::Back : Direction::Fwd; }

/// Immutable syntax tree denoting a countable order type.
///
/// Nodes are shared between copies; a Term is cheap to copy and safe to read
/// from any number of threads.
class Term {
 public:
  Term();  // ZERO

  static Term zero();
  static Term one();
  /// FIN(n) with n >= 2.
  static Term fin(std::uint64_t n);
  /// The finite chain with n points: ZERO, ONE or FIN(n).
  static Term points(std::uint64_t n);
  static Term sum(std::vector<Term> parts);
  static Term periodic(Direction direction, std::vector<Term> block);
  static Term eta();
  static Term wpow();
  static Term wpow_rev();
  static Term rev(Term inner);
  static Term zeta(std::vector<Term> block);

  Kind kind() const noexcept;
  /// Point count of a FIN node (1 for ONE, 0 for ZERO).
  std::uint64_t count() const noexcept;
  Direction direction() const noexcept;
  /// Summands of a SUM, block of a PERIODIC/ZETA, single operand of REV.
  std::span<const Term> children() const noexcept;

  bool is(Kind k) const noexcept { return kind() == k; }
  bool is_finite_atom() const noexcept {
    return kind() == Kind::Zero || kind() == Kind::One || kind() == Kind::Fin;
  }

  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

enum class Format { Text, Json };

/// Parses the term grammar. Sugar (`rev(...)`, `z[...]`) is kept as written.
Term parse(std::string_view text);

/// Canonical text or JSON rendering. Text output re-parses to the same tree.
std::string render(const Term& t, Format format = Format::Text);
nlohmann::json to_json(const Term& t);

/// Rewrites t into normal form: sugar eliminated, sums flattened, finite runs
/// merged, periodic blocks reduced to their primitive root. The result is
/// isomorphic to t.
Term normalize(const Term& t);

/// Reverse order type of a normalized term (input is normalized first).
Term reverse(const Term& t);

bool contains_eta(const Term& t);
bool contains_wpow(const Term& t);
/// No BACK periodic, no ETA, no reversed w^w: the term denotes an ordinal.
bool well_ordered(const Term& t);
/// Denotes a finite chain (only ZERO/ONE/FIN nodes after normalization).
bool is_finite(const Term& t);
/// Number of points of a finite normalized term.
std::uint64_t finite_size(const Term& t);

/// Top-level summands of a normalized term; ZERO yields an empty list.
std::vector<Term> summands(const Term& t);
/// Builds the normalized term for a concatenation of normalized summands.
/// Nested sums are flattened, zeros dropped, adjacent finite items merged.
Term concat(std::span<const Term> items);
Term concat(std::initializer_list<Term> items);

}  // namespace ordcalc

template <>
struct std::hash<ordcalc::Term> {
  std::size_t operator()(const ordcalc::Term& t) const noexcept { return t.hash(); }
};

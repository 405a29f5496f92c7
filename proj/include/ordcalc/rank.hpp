// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ordcalc/term.hpp"

namespace ordcalc {

/// Hausdorff rank: a natural number or INFINITE (only for terms with a w^w atom).
class Rank {
 public:
  static Rank finite(std::uint64_t n) { return Rank(n); }
  static Rank infinite() { return Rank(); }

  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const { return value_.value(); }

  friend bool operator==(const Rank&, const Rank&) = default;
  friend std::strong_ordering operator<=>(const Rank& a, const Rank& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return is_infinite() ? "INFINITE" : std::to_string(*value_); }

 private:
  Rank() = default;
  explicit Rank(std::uint64_t n) : value_(n) {}
  std::optional<std::uint64_t> value_;
};

/// One round of finite condensation: points at finite distance are merged and
/// each class becomes a single point of the returned quotient term.
/// Precondition: t is scattered and w^w-free.
Term condense(const Term& t);

/// Is t a Z-indexed sum of chains from lower levels, alpha times over?
/// Level 0 is {0, 1}; level alpha >= 1 holds exactly the chains whose
/// alpha-fold condensation has at most one point.
bool hierarchy_member(const Term& t, std::uint64_t alpha);

/// Least alpha with hierarchy_member(t, alpha); INFINITE for w^w atoms.
/// Throws E_ETA_TERM for non-scattered terms.
Rank hausdorff_rank(const Term& t);

}  // namespace ordcalc

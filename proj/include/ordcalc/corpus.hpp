// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

/// Tokens of the shortest text form: numerals, `eta`, `w`, `w*`, `w^w`,
/// brackets and separators each count one; `w[1]` counts as the single `w`.
std::size_t token_count(const Term& t);

/// Depth of periodic nesting (0 for finite sums of atoms).
std::size_t nesting_depth(const Term& t);

struct EnumOptions {
  std::size_t max_tokens = 8;
  std::size_t max_depth = 2;
  std::uint64_t max_numeral = 2;
  bool backward = true;
  bool eta = false;
};

/// Every distinct normalized term whose syntax fits the limits, sorted by
/// (token count, rendered text).
std::vector<Term> enumerate_terms(const EnumOptions& options);

struct RandomOptions {
  std::size_t max_depth = 3;
  std::size_t max_items = 3;
  std::uint64_t max_numeral = 3;
  bool backward = true;
  bool eta = false;
};

/// Random normalized term (w^w-free).
Term random_term(std::mt19937_64& rng, const RandomOptions& options);

/// Random parseable tree that may contain `rev(...)` and `z[...]` sugar.
Term random_sugared_term(std::mt19937_64& rng, const RandomOptions& options);

}  // namespace ordcalc

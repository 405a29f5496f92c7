// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string_view>

namespace ordcalc {

enum class Relation { Embeds, Equimorphic };

/// A relation between two order types proved by hand (see docs/hand_facts.md).
struct HandFact {
  std::string_view id;
  Relation relation;
  std::string_view left;
  std::string_view right;
  bool expected;
};

std::span<const HandFact> hand_facts();

/// Evaluates one fact with the embedding engine.
bool holds(const HandFact& fact);

}  // namespace ordcalc

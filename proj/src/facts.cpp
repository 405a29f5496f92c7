// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/facts.hpp"

#include <array>

#include "ordcalc/embed.hpp"

namespace ordcalc {

namespace {

// Keep in sync with docs/hand_facts.md, which holds the proofs.
constexpr std::array kFacts{
    HandFact{"F01", Relation::Embeds, "w", "z", true},
    HandFact{"F02", Relation::Embeds, "z", "w", false},
    HandFact{"F03", Relation::Embeds, "w*", "w", false},
    HandFact{"F04", Relation::Embeds, "z", "w+w*", false},
    HandFact{"F05", Relation::Embeds, "w+w*", "z", false},
    HandFact{"F06", Relation::Embeds, "1+w*", "w*", false},
    HandFact{"F07", Relation::Equimorphic, "w[1,w*]", "w[w*]", true},
    HandFact{"F08", Relation::Equimorphic, "w", "w+1", false},
    HandFact{"F09", Relation::Embeds, "w+1", "w+w", true},
    HandFact{"F10", Relation::Embeds, "w[w]", "w+w", false},
    HandFact{"F11", Relation::Equimorphic, "w[1,w]", "w[w]", true},
    HandFact{"F12", Relation::Equimorphic, "1+w", "w", true},
    HandFact{"F13", Relation::Embeds, "w^w", "eta", true},
    HandFact{"F14", Relation::Embeds, "eta", "w[w*]", false},
    HandFact{"F15", Relation::Embeds, "z+z", "z", false},
    HandFact{"F16", Relation::Embeds, "w*[w]", "w[z]", false},
    HandFact{"F17", Relation::Embeds, "w[w]", "w^w", true},
    HandFact{"F18", Relation::Embeds, "w^w", "w[w[w]]", false},
    HandFact{"F19", Relation::Equimorphic, "w+w*", "w+1+w*", false},
    HandFact{"F20", Relation::Embeds, "w[z]", "z[w]", false},
};

}  // namespace

std::span<const HandFact> hand_facts() { return kFacts; }

bool holds(const HandFact& fact) {
  Term a = parse(fact.left), b = parse(fact.right);
  bool value = fact.relation == Relation::Embeds ? embeds(a, b) : equimorphic(a, b);
  return value == fact.expected;
}

}  // namespace ordcalc

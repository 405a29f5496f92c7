// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "ordcalc/corpus.hpp"
#include "ordcalc/embed.hpp"
#include "ordcalc/rank.hpp"

using namespace ordcalc;

namespace {

Rank rank(std::string_view text) { return hausdorff_rank(parse(text)); }

// z nested alpha times; U_0 = 1.
Term universal(std::uint64_t alpha) {
  Term u = Term::one();
  for (std::uint64_t i = 0; i < alpha; ++i) u = normalize(Term::zeta({u}));
  return u;
}

Rank oracle_rank(const Term& t) {
  for (std::uint64_t a = 0; a < 6; ++a)
    if (embeds(t, universal(a))) return Rank::finite(a);
  return Rank::infinite();
}

}  // namespace

TEST_CASE("rank pins") {
  CHECK(rank("1") == Rank::finite(0));
  CHECK(rank("0") == Rank::finite(0));
  CHECK(rank("2") == Rank::finite(1));
  CHECK(rank("17") == Rank::finite(1));
  CHECK(rank("w") == Rank::finite(1));
  CHECK(rank("w*") == Rank::finite(1));
  CHECK(rank("z") == Rank::finite(1));
  CHECK(rank("1+w") == Rank::finite(1));
  CHECK(rank("w+1") == Rank::finite(2));
  CHECK(rank("w+w*") == Rank::finite(2));
  CHECK(rank("w[w]") == Rank::finite(2));
  CHECK(rank("w[w+w*]") == Rank::finite(2));
  CHECK(rank("w[w[w]]") == Rank::finite(3));
  CHECK(rank("z[z]") == Rank::finite(2));
  CHECK(rank("w^w").is_infinite());
  CHECK(rank("1+w^w").is_infinite());
  CHECK(Rank::finite(100) < Rank::infinite());
  CHECK(Rank::infinite().to_string() == "INFINITE");
}

TEST_CASE("hierarchy membership") {
  CHECK(hierarchy_member(parse("w"), 1));
  CHECK_FALSE(hierarchy_member(parse("w+1"), 1));
  CHECK(hierarchy_member(parse("w+1"), 2));
  CHECK(hierarchy_member(parse("1"), 0));
  CHECK(hierarchy_member(parse("0"), 0));
  CHECK_FALSE(hierarchy_member(parse("2"), 0));
  CHECK(hierarchy_member(parse("w[w]"), 5));
}

TEST_CASE("non-scattered and w^w inputs") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const TermError& e) {
      return e.code();
    }
    return ErrorCode::Syntax;
  };
  CHECK(code([] { hausdorff_rank(parse("eta")); }) == ErrorCode::EtaTerm);
  CHECK(code([] { hausdorff_rank(parse("w[1,eta]")); }) == ErrorCode::EtaTerm);
  CHECK(code([] { hierarchy_member(parse("w^w"), 3); }) == ErrorCode::InfiniteRankAtom);
  CHECK(code([] { condense(parse("w^w")); }) == ErrorCode::InfiniteRankAtom);
}

TEST_CASE("condensation examples") {
  CHECK(render(condense(parse("5"))) == "1");
  CHECK(render(condense(parse("w+w*"))) == "2");
  CHECK(render(condense(parse("w[w]"))) == "w[1]");
  CHECK(render(condense(parse("z[w]"))) == "w*[1]+w[1]");
}

TEST_CASE("rank agrees with the universal-chain characterization") {
  EnumOptions o;
  o.max_tokens = 9;
  o.max_depth = 3;
  auto terms = enumerate_terms(o);
  REQUIRE(terms.size() > 1000);
  for (const auto& t : terms) {
    INFO(render(t));
    CHECK(hausdorff_rank(t) == oracle_rank(t));
  }
}

TEST_CASE("rank is invariant under reversal and monotone under sums") {
  std::mt19937_64 rng(17);
  RandomOptions opts;
  for (int i = 0; i < 500; ++i) {
    Term a = random_term(rng, opts), b = random_term(rng, opts);
    INFO(render(a) << " , " << render(b));
    Rank ra = hausdorff_rank(a), rb = hausdorff_rank(b);
    CHECK(hausdorff_rank(reverse(a)) == ra);
    Rank rs = hausdorff_rank(concat({a, b}));
    Rank hi = std::max(ra, rb);
    CHECK(rs >= hi);
    CHECK(rs <= Rank::finite(hi.value() + 1));
    if (embeds(a, b)) CHECK(ra <= rb);
  }
}

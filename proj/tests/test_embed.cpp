// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "ordcalc/corpus.hpp"
#include "ordcalc/embed.hpp"
#include "ordcalc/facts.hpp"
#include "ordcalc/ordinal.hpp"

using namespace ordcalc;

namespace {

Term n(std::string_view text) { return normalize(parse(text)); }
bool emb(std::string_view a, std::string_view b) { return embeds(n(a), n(b)); }
bool eq(std::string_view a, std::string_view b) { return equimorphic(n(a), n(b)); }

std::vector<Term> small_corpus(bool eta) {
  EnumOptions o;
  o.max_tokens = 7;
  o.max_depth = 2;
  o.eta = eta;
  return enumerate_terms(o);
}

}  // namespace

TEST_CASE("basic embeddings") {
  CHECK(emb("3", "w"));
  CHECK_FALSE(emb("w", "5"));
  CHECK(emb("2", "1+1"));
  CHECK_FALSE(emb("3", "2"));
  CHECK(emb("w", "z"));
  CHECK(emb("w*", "z"));
  CHECK_FALSE(emb("z", "w"));
  CHECK_FALSE(emb("z", "w+w*"));
  CHECK(emb("w*+w", "z"));
  CHECK(emb("w[w]", "w[w*+w]"));
  CHECK(emb("w*[w]", "z[w]"));
  CHECK(eq("w[2,w]", "w[w]"));
  CHECK_FALSE(eq("w+w", "w[1,w[1]]+w"));
  CHECK_FALSE(emb("w[w]", "w[w*]"));
  CHECK_FALSE(emb("w*", "w[w]"));
}

TEST_CASE("hand facts hold") {
  for (const auto& f : hand_facts()) {
    INFO(f.id);
    CHECK(holds(f));
  }
}

TEST_CASE("eta and w^w targets") {
  CHECK(emb("w[w*[1,w]]+3", "eta"));
  CHECK(emb("eta", "w[1,eta]"));
  CHECK_FALSE(emb("eta", "w[w[1,w*]]"));
  CHECK(emb("w[w[w]]+5", "w^w"));
  CHECK(emb("1+w^w", "w^w"));
  CHECK_FALSE(emb("w^w+1", "w^w"));
  CHECK_FALSE(emb("w*", "w^w"));
  CHECK(emb("w*[w*]", "w^w*"));
  CHECK_FALSE(emb("w^w", "w[w[w[w]]]"));
  CHECK(emb("w^w", "eta"));
  CHECK(emb("w^w", "w^w+w^w"));
  CHECK_FALSE(emb("w^w", "z[z[z]]"));
}

TEST_CASE("cuts of small terms") {
  auto pairs = [](const Term& t) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : cuts(t)) out.emplace_back(render(c.left), render(c.right));
    std::sort(out.begin(), out.end());
    return out;
  };
  using P = std::vector<std::pair<std::string, std::string>>;
  CHECK(pairs(Term::fin(2)) == P{{"0", "2"}, {"1", "1"}, {"2", "0"}});
  auto wc = pairs(n("w"));
  CHECK(std::find(wc.begin(), wc.end(), std::pair<std::string, std::string>{"1", "w[1]"}) !=
        wc.end());
  CHECK(std::find(wc.begin(), wc.end(), std::pair<std::string, std::string>{"0", "w[1]"}) !=
        wc.end());
  // a cut strictly inside the nested block
  auto inner = cuts(n("w[1,w]"));
  CHECK(std::any_of(inner.begin(), inner.end(), [](const Cut& c) { return c.witness.size() >= 2; }));
  CHECK(pairs(n("w^w")).size() == 2);
}

TEST_CASE("cuts split the term") {
  std::mt19937_64 rng(11);
  RandomOptions opts;
  opts.max_depth = 2;
  opts.eta = true;
  for (int i = 0; i < 150; ++i) {
    Term t = random_term(rng, opts);
    for (const auto& c : cuts(t, 2)) {
      INFO(render(t) << " = " << render(c.left) << " | " << render(c.right));
      CHECK(equimorphic(concat({c.left, c.right}), t));
      CHECK(embeds(c.left, t));
      CHECK(embeds(c.right, t));
    }
  }
}

TEST_CASE("cut rule is sound: piecewise embeddings compose") {
  // If a = a1 + a2 with a1 -> l and a2 -> r for a cut (l, r) of b, then a -> b.
  std::mt19937_64 rng(12);
  RandomOptions opts;
  opts.max_depth = 2;
  auto corpus = small_corpus(false);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  int composed = 0;
  for (int i = 0; i < 200; ++i) {
    Term b = random_term(rng, opts);
    for (const auto& c : cuts(b)) {
      const Term& a1 = corpus[pick(rng)];
      const Term& a2 = corpus[pick(rng)];
      if (embeds(a1, c.left) && embeds(a2, c.right)) {
        ++composed;
        CHECK(embeds(concat({a1, a2}), b));
      }
    }
  }
  CHECK(composed > 50);
}

TEST_CASE("agrees with ordinal comparison on well-ordered terms") {
  EnumOptions o;
  o.max_tokens = 9;
  o.max_depth = 3;
  o.backward = false;
  auto terms = enumerate_terms(o);
  REQUIRE(terms.size() > 200);
  for (const auto& a : terms) {
    auto ca = ordinal_cnf(a);
    REQUIRE(ca);
    for (const auto& b : terms) {
      auto cb = ordinal_cnf(b);
      if (embeds(a, b) != (*ca <= *cb)) {
        FAIL_CHECK(render(a) << " vs " << render(b));
      }
    }
  }
}

TEST_CASE("reflexivity, transitivity and duality on a grid") {
  auto terms = small_corpus(true);
  REQUIRE(terms.size() > 100);
  const std::size_t k = terms.size();
  std::vector<char> m(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i * k + j] = embeds(terms[i], terms[j]);
  for (std::size_t i = 0; i < k; ++i) CHECK(m[i * k + i]);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (int s = 0; s < 20000; ++s) {
    std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (m[a * k + b] && m[b * k + c] && !m[a * k + c])
      FAIL_CHECK(render(terms[a]) << " " << render(terms[b]) << " " << render(terms[c]));
  }
  for (int s = 0; s < 3000; ++s) {
    std::size_t a = pick(rng), b = pick(rng);
    CHECK(bool(m[a * k + b]) == embeds(reverse(terms[a]), reverse(terms[b])));
  }
}

TEST_CASE("sums are monotone") {
  std::mt19937_64 rng(4);
  RandomOptions opts;
  opts.max_depth = 2;
  opts.eta = true;
  for (int i = 0; i < 400; ++i) {
    Term a = random_term(rng, opts), b = random_term(rng, opts), c = random_term(rng, opts);
    if (!embeds(a, b)) continue;
    CHECK(embeds(concat({a, c}), concat({b, c})));
    CHECK(embeds(concat({c, a}), concat({c, b})));
  }
  for (int i = 0; i < 200; ++i) {
    Term a = random_term(rng, opts), b = random_term(rng, opts);
    CHECK(embeds(a, concat({a, b})));
    CHECK(embeds(b, concat({a, b})));
  }
}

TEST_CASE("cache does not change answers") {
  EmbedEngine fresh;
  auto terms = small_corpus(false);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
  for (int i = 0; i < 500; ++i) {
    const Term& a = terms[pick(rng)];
    const Term& b = terms[pick(rng)];
    bool first = fresh.embeds(a, b);
    fresh.clear();
    CHECK(first == fresh.embeds(a, b));
    CHECK(first == fresh.embeds(a, b));
  }
  CHECK(fresh.cache_size() > 0);
}

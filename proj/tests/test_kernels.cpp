// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ordcalc/corpus.hpp"
#include "ordcalc/kernels.hpp"

using namespace ordcalc;

TEST_CASE("parallel kernels match the serial reference") {
  EnumOptions o;
  o.max_tokens = 7;
  o.eta = true;
  auto terms = enumerate_terms(o);
  REQUIRE(terms.size() > 100);
  CHECK(worker_threads() >= 1);

  default_engine().clear();
  auto serial = embedding_matrix_serial(terms);
  default_engine().clear();
  auto parallel = embedding_matrix_parallel(terms);
  CHECK(serial == parallel);
  CHECK(embedding_matrix(terms, Execution::Serial) == serial);

  std::vector<Term> scattered;
  for (const auto& t : terms)
    if (!contains_eta(t)) scattered.push_back(t);
  CHECK(ranks_serial(scattered) == ranks_parallel(scattered));
}

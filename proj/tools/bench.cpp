// SPDX-License-Identifier: Apache-2.0
//
// Times the serial reference kernels against their OpenMP versions and checks
// that both produce identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "ordcalc/corpus.hpp"
#include "ordcalc/embed.hpp"
#include "ordcalc/kernels.hpp"
#include "ordcalc/laver.hpp"

using namespace ordcalc;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel benchmark", "ordcalc_bench"};
  std::size_t tokens = 7;
  std::uint64_t level = 2;
  app.add_option("--tokens", tokens, "Token budget of the enumerated corpus");
  app.add_option("--level", level, "Laver level for the dedup benchmark");
  CLI11_PARSE(app, argc, argv);

  EnumOptions opts;
  opts.max_tokens = tokens;
  auto corpus = enumerate_terms(opts);
  std::printf("threads: %d, corpus: %zu terms (%zu pairs)\n", worker_threads(), corpus.size(),
              corpus.size() * corpus.size());

  std::vector<std::uint8_t> serial, parallel;
  default_engine().clear();
  double ts = seconds([&] { serial = embedding_matrix_serial(corpus); });
  default_engine().clear();
  double tp = seconds([&] { parallel = embedding_matrix_parallel(corpus); });
  std::printf("embedding matrix: serial %.3fs, parallel %.3fs, identical=%s\n", ts, tp,
              serial == parallel ? "yes" : "NO");

  std::vector<RepSet> ls, lp;
  default_engine().clear();
  ts = seconds([&] { ls = enumerate_reps(level, level, Execution::Serial); });
  default_engine().clear();
  tp = seconds([&] { lp = enumerate_reps(level, level, Execution::Parallel); });
  bool same = ls.back().reps == lp.back().reps;
  std::printf("laver level %llu (%zu reps): serial %.3fs, parallel %.3fs, identical=%s\n",
              static_cast<unsigned long long>(level), lp.back().reps.size(), ts, tp,
              same ? "yes" : "NO");
  return serial == parallel && same ? 0 : 1;
}

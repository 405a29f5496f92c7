// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/kernels.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ordcalc {

std::vector<std::uint8_t> embedding_matrix_serial(std::span<const Term> terms) {
  const std::size_t n = terms.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = embeds(terms[i], terms[j]);
  return m;
}

std::vector<std::uint8_t> embedding_matrix_parallel(std::span<const Term> terms) {
  const auto n = static_cast<std::int64_t>(terms.size());
  std::vector<std::uint8_t> m(terms.size() * terms.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) m[i * n + j] = embeds(terms[i], terms[j]);
  return m;
}

std::vector<Rank> ranks_serial(std::span<const Term> terms) {
  std::vector<Rank> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(hausdorff_rank(t));
  return out;
}

std::vector<Rank> ranks_parallel(std::span<const Term> terms) {
  const auto n = static_cast<std::int64_t>(terms.size());
  std::vector<Rank> out(terms.size(), Rank::finite(0));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) out[i] = hausdorff_rank(terms[i]);
  return out;
}

int worker_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ordcalc

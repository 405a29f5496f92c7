// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ordcalc/embed.hpp"
#include "ordcalc/laver.hpp"
#include "ordcalc/rank.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

/// Row-major n x n matrix, entry [i * n + j] = embeds(terms[i], terms[j]).
/// The serial version is the reference the parallel one is tested against.
std::vector<std::uint8_t> embedding_matrix_serial(std::span<const Term> terms);
std::vector<std::uint8_t> embedding_matrix_parallel(std::span<const Term> terms);

inline std::vector<std::uint8_t> embedding_matrix(std::span<const Term> terms, Execution exec) {
  return exec == Execution::Serial ? embedding_matrix_serial(terms)
                                   : embedding_matrix_parallel(terms);
}

/// Hausdorff ranks of scattered terms.
std::vector<Rank> ranks_serial(std::span<const Term> terms);
std::vector<Rank> ranks_parallel(std::span<const Term> terms);

/// Threads OpenMP will use for the parallel kernels.
int worker_threads();

}  // namespace ordcalc

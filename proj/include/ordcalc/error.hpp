// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ordcalc {

enum class ErrorCode {
  Syntax,
  EmptyBlock,
  BadNat,
  UnsupportedNesting,
  EtaTerm,
  InfiniteRankAtom,
  EmptySet,
  RankCeiling,
  BadLevel,
  Precondition,
  NotNormalized,
};

std::string_view error_code_name(ErrorCode code);

/// Raised by every module operation; `code()` identifies the failure class and
/// `position()` is set for parse errors (byte offset into the input text).
class TermError : public std::runtime_error {
 public:
  TermError(ErrorCode code, const std::string& message,
            std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace ordcalc

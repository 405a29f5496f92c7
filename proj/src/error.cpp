// SPDX-License-Identifier: Apache-2.0

#include "ordcalc/error.hpp"

namespace ordcalc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "E_SYNTAX";
    case ErrorCode::EmptyBlock: return "E_EMPTY_BLOCK";
    case ErrorCode::BadNat: return "E_BAD_NAT";
    case ErrorCode::UnsupportedNesting: return "E_UNSUPPORTED_NESTING";
    case ErrorCode::EtaTerm: return "E_ETA_TERM";
    case ErrorCode::InfiniteRankAtom: return "E_INFINITE_RANK_ATOM";
    case ErrorCode::EmptySet: return "E_EMPTY_SET";
    case ErrorCode::RankCeiling: return "E_RANK_CEILING";
    case ErrorCode::BadLevel: return "E_BAD_LEVEL";
    case ErrorCode::Precondition: return "E_PRECONDITION";
    case ErrorCode::NotNormalized: return "E_NOT_NORMALIZED";
  }
  return "E_UNKNOWN";
}

TermError::TermError(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace ordcalc

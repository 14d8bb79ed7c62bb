#include "magma/error.hpp"

namespace magma {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EntryOutOfRange: return "ENTRY_OUT_OF_RANGE";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::ProductOrderOverflow: return "PRODUCT_ORDER_OVERFLOW";
    case ErrorCode::OrderTooLarge: return "ORDER_TOO_LARGE";
    case ErrorCode::OrderMismatch: return "ORDER_MISMATCH";
    case ErrorCode::InvalidSpec: return "INVALID_SPEC";
    case ErrorCode::InvalidLoopParams: return "INVALID_LOOP_PARAMS";
    case ErrorCode::SubsetOutOfRange: return "SUBSET_OUT_OF_RANGE";
    case ErrorCode::NotClosed: return "NOT_CLOSED";
    case ErrorCode::NotDisjoint: return "NOT_DISJOINT";
    case ErrorCode::NotSSubgroupoid: return "NOT_S_SUBGROUPOID";
    case ErrorCode::NotSmarandache: return "NOT_SMARANDACHE";
    case ErrorCode::NotSemigroup: return "NOT_SEMIGROUP";
    case ErrorCode::AlphabetMismatch: return "ALPHABET_MISMATCH";
    case ErrorCode::BoundExceeded: return "BOUND_EXCEEDED";
    case ErrorCode::UnknownTheorem: return "UNKNOWN_THEOREM";
    case ErrorCode::UnknownFixture: return "UNKNOWN_FIXTURE";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace magma

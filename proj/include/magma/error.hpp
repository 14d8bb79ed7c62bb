#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace magma {

enum class ErrorCode {
  EntryOutOfRange,
  LengthMismatch,
  IndexOutOfRange,
  ProductOrderOverflow,
  OrderTooLarge,
  OrderMismatch,
  InvalidSpec,
  InvalidLoopParams,
  SubsetOutOfRange,
  NotClosed,
  NotDisjoint,
  NotSSubgroupoid,
  NotSmarandache,
  NotSemigroup,
  AlphabetMismatch,
  BoundExceeded,
  UnknownTheorem,
  UnknownFixture,
  ParseError,
};

/// Upper-case identifier of an error code, e.g. "ENTRY_OUT_OF_RANGE".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace magma

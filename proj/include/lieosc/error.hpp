#pragma once

#include <stdexcept>
#include <string>

namespace lieosc {

enum class ErrorCode {
  InvalidArgument = 1,
  InvalidScalar,
  InvalidRank,
  CutoffTooSmall,
  FamilyMismatch,
  DimensionMismatch,
  Pole,
  Consistency,
  Io,
};

/// Base exception for the library; the C API maps `code()` onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lieosc

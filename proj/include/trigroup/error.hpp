#pragma once

#include <stdexcept>
#include <string>

namespace trigroup {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  CapExceeded = 3,
  Precondition = 4,
};

/// All library failures are reported by throwing this type; the C API maps
/// `code()` onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace trigroup

#pragma once

#include <stdexcept>
#include <string>

namespace gridcover {

enum class ErrorCode {
  parse = 1,
  domain = 2,
  precondition = 3,
  too_large = 4,
  infeasible = 5,
  io = 6,
  internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gridcover

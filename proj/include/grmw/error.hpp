#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grmw {

// All library failures carry a short stable code ("NonPrimeP",
// "DivisionByZero", ...) that callers and the CLI can match on.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

}  // namespace grmw

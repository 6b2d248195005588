#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsd {

enum class ErrorCode {
  InvalidGraph,
  InvalidChar,
  TruncatedBits,
  TrailingGarbage,
  TooLarge,
  OddN,
  GenerationExhausted,
  Unsupported,
  BadM,
  NotCubic,
  NotConnected,
  DegreeBoundViolated,
  MissingColor,
  Infeasible4,
  Infeasible2,
  EdgelessGraph,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code);

// Every contract violation in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsd

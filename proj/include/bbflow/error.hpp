#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbflow {

enum class ErrorCode {
  InvalidInput,
  InvalidEdge,
  NoUniqueSource,
  NoUniqueSink,
  OracleMismatch,
  StratumMissing,
  EmptyAction,
  NotAPartition,
  CyclicGraph,
  DegenerateGraph,
  PreconditionViolated,
  BudgetExceeded,
  NotCofinite,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every bbflow operation. The code is stable and is
/// what the CLI reports under the "error" key.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace bbflow

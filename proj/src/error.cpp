#include "bbflow/error.hpp"

namespace bbflow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::InvalidEdge: return "InvalidEdge";
  case ErrorCode::NoUniqueSource: return "NoUniqueSource";
  case ErrorCode::NoUniqueSink: return "NoUniqueSink";
  case ErrorCode::OracleMismatch: return "OracleMismatch";
  case ErrorCode::StratumMissing: return "StratumMissing";
  case ErrorCode::EmptyAction: return "EmptyAction";
  case ErrorCode::NotAPartition: return "NotAPartition";
  case ErrorCode::CyclicGraph: return "CyclicGraph";
  case ErrorCode::DegenerateGraph: return "DegenerateGraph";
  case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::NotCofinite: return "NotCofinite";
  }
  return "Unknown";
}

} // namespace bbflow

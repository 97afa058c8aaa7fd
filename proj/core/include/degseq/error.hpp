#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace degseq {

enum class ErrorKind {
  InvalidDegree,
  NotSimple,
  InvalidInput,
  IndexOutOfRange,
  CriterionFails,
  InvalidEdge,
  InvalidParams,
  InvalidCut,
  ParseError,
  SwapBlocked,
  InvalidExchange,
  SearchFailed,
  OracleTooLarge,
  RepairStuck,
  NotGraphic,
  ParityError,
  TheoremViolation,
  ForbiddenGraph,
  ForbiddenSequence,
  PackingFailed,
  SearchStalled,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for the failures that would contradict a proven statement (or the
/// constructive reading of one) rather than a bad input.
inline bool is_anomaly(ErrorKind kind) noexcept {
  return kind == ErrorKind::TheoremViolation || kind == ErrorKind::SearchStalled ||
         kind == ErrorKind::RepairStuck || kind == ErrorKind::PackingFailed ||
         kind == ErrorKind::SearchFailed;
}

}  // namespace degseq

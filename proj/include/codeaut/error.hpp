#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace codeaut {

enum class ErrorKind {
  InvalidArgument,
  LengthMismatch,
  EnumerationInfeasible,
  Empty,
  NotInCode,
  NonSquarefree,
  NotADivisor,
  NoWitness,
  Undecided,
  BudgetExceeded,
  Internal,
};

/// Stable tag used in JSON records and CLI diagnostics ("enumeration-infeasible", ...).
std::string_view error_tag(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view tag() const noexcept { return error_tag(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace codeaut

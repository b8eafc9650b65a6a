#include "codeaut/error.hpp"

#include "codeaut/bigint.hpp"

namespace codeaut {

std::string_view error_tag(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::EnumerationInfeasible: return "enumeration-infeasible";
    case ErrorKind::Empty: return "empty";
    case ErrorKind::NotInCode: return "not-in-code";
    case ErrorKind::NonSquarefree: return "non-squarefree";
    case ErrorKind::NotADivisor: return "not-a-divisor";
    case ErrorKind::NoWitness: return "no-witness";
    case ErrorKind::Undecided: return "undecided";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace codeaut

#pragma once

#include <stdexcept>
#include <string>

namespace tri3d4 {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  NotInSubfield,
  ZeroScalar,
  IndexOutOfRange,
  NotInFq,
  NotInU,
  NotInG,
  TooLarge,
  BudgetExceeded,
  NotRational,
  NonIntegralDivision,
  NoEta,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tri3d4

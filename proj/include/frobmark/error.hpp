#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobmark {

enum class ErrorKind {
  InvalidParameter,
  ParseError,
  ValidationError,
  DivisionByZero,
  DimensionError,
  SizeLimit,
  TableInvalid,
  PreconditionError,
  DomainError,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frobmark

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multikostka {

enum class ErrorKind {
  Negative,
  NonMonotone,
  SizeMismatch,
  ShapeMismatch,
  NotDominated,
  InvalidDivisor,
  UnequalOrbitSizes,
  EmptyShape,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure in the library surfaces as this exception; kind() is
// the machine-readable tag the CLI reports.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace multikostka

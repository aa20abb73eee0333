#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gj2d {

enum class ErrorKind {
  DivisionByZero,
  FNotVertex,
  NotSubadditive,
  NotDiagonallyConstrainedFace,
  NotMinimal,
  NotDiagonallyConstrained,
  NotGenuinely2D,
  MTooSmall,
  Covered,
  DegeneratePerturbation,
  SplitNotMinimal,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` names the violated
/// precondition so callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gj2d

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsharp {

enum class ErrorKind {
  ZeroConstantTerm,
  NonzeroInnerConstant,
  BadConstantTerm,
  UnknownClass,
  BadParams,
  BadB1,
  IncompatibleExtremal,
  InsufficientCoefficients,
  EmptyScan,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Hard errors only. Failed bound preconditions are not errors; they are
// reported through BoundReport::applicable().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tsharp

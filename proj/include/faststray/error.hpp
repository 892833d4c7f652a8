#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace faststray {

enum class ErrorKind {
  EmptyTrajectory,
  NonMonotonicTime,
  DimensionMismatch,
  NonFiniteValue,
  InvalidParameter,
  WindowTooSmall,
  SingularSystem,
  ParseError,
  OutOfRangeCoordinate,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Library-wide exception. `line()` is set for errors raised while parsing
/// text input (1-based line numbers).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace faststray

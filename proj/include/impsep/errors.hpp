#pragma once

#include <stdexcept>
#include <string>

namespace impsep {

enum class ErrorKind {
  InvalidVertex,
  InvalidArgument,
  NotASeparator,
  NonMinimalSeparator,
  NotNormalized,
  SNotInNeighborhood,
  AdjacentTerminals,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the graph-file reader; carries the 1-based line of the fault
// (0 when the fault is not tied to a single line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::Parse, format(line, reason)), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(std::size_t line, const std::string& reason) {
    if (line == 0) return reason;
    return "line " + std::to_string(line) + ": " + reason;
  }

  std::size_t line_;
};

}  // namespace impsep

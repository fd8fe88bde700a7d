#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drd {

enum class ErrorKind {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  InvalidSpec,
  InvalidProbability,
  InadmissibleF,
  KPartTooLarge,
  NotADrdSet,
  TooLarge,
  HasIsolates,
  SyntaxError,
  CountMismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is a drd::Error carrying its kind, so
// callers (the CLI in particular) can map kinds onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures additionally carry the 1-based line of the offending input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace drd

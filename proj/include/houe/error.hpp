#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace houe {

enum class ErrorCode {
  SyntaxError,
  UnknownName,
  IllTyped,
  DuplicateDeclaration,
  BadMark,
  MissingEquations,
  InvalidPath,
  NotProp,
  ArityMismatch,
  MultiplicityExceeded,
  SignatureTooLarge,
  UninterpretedConstant,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Base error for every input-level failure. Search outcomes (no unifier,
/// open branch, exhausted budget) are values, never exceptions.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse-time error carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column)
      : Error(code, format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace houe

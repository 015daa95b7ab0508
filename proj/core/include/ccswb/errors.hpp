#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccswb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lexical, syntactic or static-semantic failure in model or formula text.
// Coordinates are 1-based; a column one past the last character is allowed.
class SourceError : public Error {
 public:
  SourceError(std::size_t line, std::size_t column, std::string message,
              std::vector<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::vector<std::string> expected_;
};

// A precondition inside the engine was violated (e.g. a non-ground term
// reached evaluation). Indicates a caller bug rather than bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class UnknownProcessError : public Error {
 public:
  using Error::Error;
};

class UnguardedRecursionError : public Error {
 public:
  using Error::Error;
};

// Raised by checkers handed an Lts whose exploration hit the state cap.
class TruncatedLtsError : public Error {
 public:
  using Error::Error;
};

class FormulaError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccswb

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causalql {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (net documents, formulas, element lists).
/// Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DuplicateNameError : public ParseError {
 public:
  DuplicateNameError(const std::string& name, std::size_t line, std::size_t column)
      : ParseError("duplicate name '" + name + "'", line, column), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownElementError : public Error {
 public:
  explicit UnknownElementError(const std::string& name)
      : Error("unknown element '" + name + "'"), name_(name) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// A well-formed argument that violates an operation's precondition:
/// for example a set that is not a line where one is required.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (subset sweep bound, coset budget) was exceeded.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace causalql

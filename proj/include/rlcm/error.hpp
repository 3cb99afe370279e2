#ifndef RLCM_ERROR_HPP_
#define RLCM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlcm {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Line and column are 1-based; line 0 means the
// text did not come from a file (e.g. a command-line word).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& message) {
    if (line == 0) {
      return "column " + std::to_string(column) + ": " + message;
    }
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Structurally invalid input, such as a Coxeter matrix that is not
// symmetric or a relation whose sides differ in length.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap was exceeded. Results are never truncated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis required by an operation was not verified.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A computation needed a least common multiple that the ball could not
// resolve.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace rlcm

#endif  // RLCM_ERROR_HPP_

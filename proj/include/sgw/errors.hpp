#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An instance exceeded a configured size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgw

#pragma once

#include <stdexcept>
#include <string>

namespace mrc {

// Caller supplied something the operation cannot accept (bad input, failed
// precondition). The CLI maps these to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, int line, int offset)
      : PreconditionError(what + " (line " + std::to_string(line) + ", offset " +
                          std::to_string(offset) + ")"),
        line_(line),
        offset_(offset) {}
  int line() const { return line_; }
  int offset() const { return offset_; }

 private:
  int line_;
  int offset_;
};

// An explicit search budget would be exceeded. Never approximated silently.
class BudgetExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A computed result contradicts one of the structural theorems the library
// implements (closure of the constructions, termination of the reduction,
// colouring extension). The CLI maps these to exit code 2.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mrc

#pragma once

#include <stdexcept>
#include <string>

namespace loopforge {

// Base class for all recoverable errors raised by the library.
struct LoopError : std::runtime_error {
  explicit LoopError(const std::string& msg) : std::runtime_error(msg) {}
};

// A grid failed the Latin-square check: `value` occurs twice in row or
// column `index` (is_row tells which).
struct NotLatinError : LoopError {
  bool is_row;
  int index;
  int value;
  NotLatinError(bool row, int idx, int val)
      : LoopError(std::string("not a Latin square: duplicate value ") +
                  std::to_string(val) + " in " + (row ? "row " : "column ") +
                  std::to_string(idx)),
        is_row(row),
        index(idx),
        value(val) {}
};

// Row 0 or column 0 of a grid is not the identity map.
struct NoIdentityAtZeroError : LoopError {
  NoIdentityAtZeroError()
      : LoopError("element 0 is not a two-sided identity") {}
};

// A two-sided inverse was requested where left and right inverses differ.
struct NotIPError : LoopError {
  explicit NotIPError(const std::string& what_failed)
      : LoopError("loop does not have the inverse property: " + what_failed) {}
};

struct NotAGroupError : LoopError {
  explicit NotAGroupError(const std::string& msg) : LoopError(msg) {}
};

struct DegreeMismatchError : LoopError {
  DegreeMismatchError(int a, int b)
      : LoopError("permutation degree mismatch: " + std::to_string(a) +
                  " vs " + std::to_string(b)) {}
};

// Parse failure in any of the text formats; pos is a byte offset when known.
struct ParseError : LoopError {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : LoopError(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// Unparenthesized mix/chain of binary operators in the identity grammar.
struct AmbiguityError : ParseError {
  AmbiguityError(const std::string& msg, std::size_t p) : ParseError(msg, p) {}
};

struct UnboundVariableError : LoopError {
  std::string var;
  explicit UnboundVariableError(const std::string& v)
      : LoopError("unbound variable: " + v), var(v) {}
};

struct InvalidSystemError : LoopError {
  explicit InvalidSystemError(const std::string& msg) : LoopError(msg) {}
};

struct NotSteinerError : LoopError {
  explicit NotSteinerError(const std::string& msg) : LoopError(msg) {}
};

// Word machinery caps.
struct LengthCapError : LoopError {
  explicit LengthCapError(std::size_t len, std::size_t cap)
      : LoopError("word length " + std::to_string(len) +
                  " exceeds cap " + std::to_string(cap)) {}
};

struct BadSplitError : LoopError {
  explicit BadSplitError(int k, std::size_t len)
      : LoopError("split position " + std::to_string(k) +
                  " invalid for word of length " + std::to_string(len)) {}
};

struct InvalidProblemError : LoopError {
  explicit InvalidProblemError(const std::string& msg) : LoopError(msg) {}
};

}  // namespace loopforge

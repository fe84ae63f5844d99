#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed grammar text or an inconsistent Grammar value. `line` is 0 when
// the problem is not tied to a source line.
class GrammarError : public Error {
 public:
  GrammarError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invariant violation when building a DependencyStructure or PhraseMarker,
// or a syntax error in one of their text encodings.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Sentence that cannot be parsed at all (unknown word, length guard).
class ParseError : public Error {
 public:
  using Error::Error;
};

// The number of analyses exceeded the configured cap.
class TruncationError : public Error {
 public:
  TruncationError(std::size_t limit)
      : Error("analysis limit of " + std::to_string(limit) + " exceeded"), limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class FunctionalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dg

#pragma once

#include <stdexcept>
#include <string>

namespace ahncut {

// Base class for all library errors. Every throw site uses a subclass so that
// callers (and the CLI) can map failure classes onto exit codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (network files, labeling files, generator specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Structurally invalid model (bad index, negative weight, unary size mismatch, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Invalid function argument (unknown algorithm name, label out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A labeling that does not fit the network it is evaluated against.
class InvalidLabelingError : public Error {
 public:
  using Error::Error;
};

// Exact enumeration would exceed the configured assignment budget.
class OracleInfeasibleError : public Error {
 public:
  using Error::Error;
};

// A pseudo-boolean problem with no finite assignment.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A pairwise term that cannot be represented as a cut (construction bug upstream;
// deliberately never caught and repaired internally).
class NonSubmodularError : public Error {
 public:
  using Error::Error;
};

}  // namespace ahncut

#pragma once

#include <stdexcept>
#include <string>

namespace eikq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different variable spaces or have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation precondition (wrong degree, bad index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed poly-text, rotation or normal-form text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A necessary condition for eikonality failed while reducing a quartic.
class NotEikonalEvidence : public Error {
 public:
  using Error::Error;
};

/// The exact path cannot proceed with rational arithmetic alone.
class ExactnessUnavailable : public Error {
 public:
  using Error::Error;
};

/// Pencil search parameters admit no candidate.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

}  // namespace eikq

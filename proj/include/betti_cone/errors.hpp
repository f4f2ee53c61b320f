#pragma once

#include <stdexcept>
#include <string>

namespace betti {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON, CLI arguments, shorthand strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates the invariants of its type (e.g. d0 >= d1).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operation applied to values from the wrong hypersurface family.
class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

/// The periodic tail rule of a diagram fails inside its explicit window.
class TailInconsistency : public Error {
 public:
  TailInconsistency(int column, int degree)
      : Error("tail rule violated at column " + std::to_string(column) +
              ", degree " + std::to_string(degree)),
        column_(column),
        degree_(degree) {}

  int column() const { return column_; }
  int degree() const { return degree_; }

 private:
  int column_;
  int degree_;
};

}  // namespace betti

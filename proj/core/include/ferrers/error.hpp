#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (permutation, board, pattern, program).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value breaks a data invariant: not a permutation, not a Ferrers
/// board, a dot outside the board, and so on.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A well-formed value was passed where the operation cannot accept it
/// (k < 2, a board that is not self-conjugate, a pattern without the
/// required prefix).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ferrers

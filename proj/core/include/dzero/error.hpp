#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dzero {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based byte offset into the
/// text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value violates one of its structural invariants (non-homogeneous entry,
/// d∘d != 0, non-commuting chain map, ...). The message names the invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Operands live over different graded rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands are defined over different rings") {}
};

/// The operation does not support the shape of its input.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace dzero

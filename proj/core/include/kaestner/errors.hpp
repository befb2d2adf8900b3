#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kaestner {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a byte offset into the parsed
/// text, or npos when the problem is not tied to one location.
class ParseError : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Structurally invalid data: wrong table shapes, out-of-range entries,
/// Gauss codes violating the pairing rules.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between elements of different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Inversion of a non-unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A Reidemeister move was requested where its pattern does not occur.
class MoveError : public Error {
 public:
  using Error::Error;
};

}  // namespace kaestner

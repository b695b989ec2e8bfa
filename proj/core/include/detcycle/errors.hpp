#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detcycle {

// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands built over different rings.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// Input rejected by a precondition: invalid scene data, a non-unit passed to
// an inversion, a presentation outside the supported fragment.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace detcycle

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qrep {

// Base of every contract violation raised by the library. Outcomes that are
// part of the mathematics (an uncertified level, a survived scalar identity)
// are values, never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NonPrimitiveRoot : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class InvalidColor : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NonHyperbolic : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

// Raised by the text formats; carries the offending token and its byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t position)
      : Error(message + " at position " + std::to_string(position) + " (token '" + token + "')"),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

}  // namespace qrep

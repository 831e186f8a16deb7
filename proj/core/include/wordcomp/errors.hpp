#pragma once

#include <stdexcept>
#include <string>

namespace wordcomp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownLetterError : Error {
  explicit UnknownLetterError(unsigned long letter)
      : Error("unknown letter " + std::to_string(letter)) {}
};

struct NotProlongableError : Error {
  using Error::Error;
};

// The morphism is prolongable in the syntactic sense but its fixed point is
// finite, so no prefix of the requested length exists.
struct NonExpandingError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

struct DigitOutOfRangeError : Error {
  using Error::Error;
};

struct WindowTooSmallError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

}  // namespace wordcomp

#pragma once

#include <stdexcept>
#include <string>

namespace escrate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

/// Probability data violating a measure invariant (sum, positivity, ergodicity).
class InvalidMeasure : public Error {
public:
  using Error::Error;
};

/// The hole uses a transition of probability zero under the Markov measure.
class ForbiddenWord : public Error {
public:
  using Error::Error;
};

class NoPositiveRoot : public Error {
public:
  using Error::Error;
};

/// An enumeration would exceed its configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace escrate

#pragma once

#include <stdexcept>
#include <string>

namespace quivermut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad shape, bad type designation, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class IndexOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Attempt to mutate at a frozen vertex.
class FrozenIndex : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotSkewSymmetrizable : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// A denominator that should be a monomial is not (value left the Laurent ring).
class NotLaurent : public Error {
 public:
  using Error::Error;
};

/// Unbounded enumeration requested on a class that is not known to be finite.
class UnboundedRequest : public Error {
 public:
  using Error::Error;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("cancelled") {}
};

}  // namespace quivermut

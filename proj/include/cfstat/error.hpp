#pragma once

#include <stdexcept>
#include <string>

namespace cfstat {

/// Base of every error the library throws. Each subclass maps to one
/// failure class so front ends can translate it into an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a domain invariant (non-reduced fraction, bad window,
/// malformed digit string, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class WindowTooLong : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A continuant or product left the checked 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class EmptyEnsemble : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace cfstat

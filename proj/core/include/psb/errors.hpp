#pragma once

#include <stdexcept>
#include <string>

namespace psb {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// City count outside the supported range (n >= 3).
class InvalidN : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Tour is not a pyramidal tour with step-backs.
class NotPsb : public Error {
 public:
  using Error::Error;
};

/// Encoding violates the step-back pair invariants.
class MalformedEncoding : public Error {
 public:
  using Error::Error;
};

/// Two operands have different city counts.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Adjacency test invoked on equal tours.
class IdenticalTours : public Error {
 public:
  using Error::Error;
};

/// Right block does not lie strictly right of the left block.
class InvalidBlockPair : public Error {
 public:
  using Error::Error;
};

/// Witness assembly produced an invalid pair; indicates an internal bug.
class WitnessAssemblyFailure : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a hard size guard for an exponential search.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Skeleton size cap exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Unsupported export format name.
class UnknownFormat : public Error {
 public:
  using Error::Error;
};

/// Cost matrix contains NaN or infinity.
class NonFiniteCost : public Error {
 public:
  using Error::Error;
};

}  // namespace psb

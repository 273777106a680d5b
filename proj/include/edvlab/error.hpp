#pragma once

#include <stdexcept>
#include <string>

namespace edvlab {

/// Base for every error raised by the library. Input validation failures
/// derive from InvalidInput; broken internal invariants are InternalError.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class InvalidTree : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class InvalidEdge : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class InvalidArgument : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class InvalidMove : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class InvalidComparison : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class InvalidPair : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class PreconditionFailed : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class OutOfRange : public InvalidInput {
public:
  using InvalidInput::InvalidInput;
};

class ClosureOverflow : public Error {
public:
  using Error::Error;
};

class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace edvlab

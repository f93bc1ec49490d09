#pragma once

#include <stdexcept>
#include <string>

namespace ghostpi {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (bad simplex, non-automorphism, ...).
class InvariantError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its contract (bad basepoint, disconnected input, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured computational cap (group order, generator count, budget) was exceeded.
class CapError : public Error {
public:
  using Error::Error;
};

/// Input document does not match the expected schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

} // namespace ghostpi

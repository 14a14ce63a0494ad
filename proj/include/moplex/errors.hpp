#pragma once

#include <stdexcept>
#include <string>

namespace moplex {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: parse failures, out-of-range vertex ids, bad orderings.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exponential routine was asked to run beyond its size guard.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A structural guarantee failed to hold on a concrete input.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace moplex

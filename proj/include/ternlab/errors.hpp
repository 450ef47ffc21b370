#pragma once

#include <stdexcept>
#include <string>

namespace ternlab {

/// Malformed or out-of-range input (bad index, bad file, bad table).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was requested on an algebra that lacks a required axiom.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ternlab

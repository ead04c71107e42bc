#pragma once

#include <stdexcept>
#include <string>

namespace matchfield {

/// A weight matrix attains its minimum on some k-subset with two different permutations.
class NonGenericError : public std::runtime_error {
 public:
  explicit NonGenericError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured candidate cap or deadline.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact check that is supposed to hold did not.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matchfield

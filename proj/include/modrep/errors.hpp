#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input values (factors < 2, non-prime primes, bad corpus bounds).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Binary submodule operation applied to submodules of different modules.
class ParentMismatchError : public Error {
 public:
  using Error::Error;
};

/// A lattice or candidate-count estimate exceeded the configured cap.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

class SubsetError : public Error {
 public:
  using Error::Error;
};

class UnknownTheoremError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace modrep

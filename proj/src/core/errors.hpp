#pragma once

#include <stdexcept>
#include <string>

namespace chartab {

/// Malformed textual input (permutations, partitions, literals, fixtures).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical check failed: a norm, a multiplicity, an equation system.
class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A resource bound was exceeded (group closure cap).
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace chartab

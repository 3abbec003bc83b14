#pragma once

#include <stdexcept>
#include <string>

namespace bentkit {

// Precondition violated: wrong arity, invalid mask, non-bent input, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text or file input.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Request exceeds a hard size cap (arity guard, oracle cap, census cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bentkit

#pragma once

#include <stdexcept>
#include <string>

namespace hatgame {

// Violated precondition of a public operation (bad n, mismatched sizes, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed distribution text (anything outside {R, B}, or empty).
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds what exhaustive enumeration can handle.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A guess rule tried to read the observer's own hat.
class PeekError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hatgame

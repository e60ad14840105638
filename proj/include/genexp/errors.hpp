#pragma once

#include <stdexcept>
#include <string>

namespace genexp {

/// Bad input: malformed text, wrong rank, weight outside the first layer,
/// non-dominant where a dominant weight is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two computations that must agree did not.  Always a bug or a
/// counterexample, never a usage problem.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace genexp

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phasespace {

/// Expression syntax error. `offset` is the 1-based byte position of the
/// offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A numeric contract was violated (normalization drift, unresolved spectral
/// content, negative variance, instability). The CLI maps this to exit code 2.
class NumericContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace phasespace

#pragma once

#include <stdexcept>
#include <string>

namespace pmcover {

// Malformed input text (JSON syntax, wrong field types, bad model spec).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exponential search or enumeration was asked to go past its size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pmcover

#pragma once

#include <stdexcept>
#include <string>

namespace lensfloer {

// Input outside the mathematical domain of an operation (p even, gcd != 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A cross-check between two computation routes failed. Always a bug, never
// a property of the input.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lensfloer

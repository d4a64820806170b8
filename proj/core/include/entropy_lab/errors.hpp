#pragma once

#include <stdexcept>
#include <string>

namespace entropy_lab {

// Invalid input data: a malformed probability vector, count vector, or parameter.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (digamma pole, KL without absolute continuity, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed-form bound was evaluated outside the precondition under which it holds.
class regime_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested exact computation exceeds the desk-scale feasibility guard.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entropy_lab

#pragma once

#include <stdexcept>
#include <string>

namespace gridhom {

// Every failure the library reports derives from Error. The CLI maps the
// concrete type onto its exit code (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed grid text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Marker rows that are not permutations, out-of-range entries, n = 0, or a
// multi-component input where a knot is required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A commutation or destabilization whose precondition does not hold.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

// Input larger than a configured enumeration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An internal identity failed: d^2 != 0, inexact division, UCT mismatch,
// more than one tower. Results are never reported after one of these.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// 1 for input problems, 2 for caps, 3 for internal consistency failures.
int exit_code(const Error& e) noexcept;

}  // namespace gridhom

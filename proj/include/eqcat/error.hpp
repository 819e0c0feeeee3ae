#pragma once

#include <stdexcept>
#include <string>

namespace eqcat {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (bad prime, bad JSON, bad table).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A shape or subgroup-containment precondition was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Idempotent splitting failed; usually the algebra is not semisimple.
class SplitError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractError(what);
}

}  // namespace eqcat

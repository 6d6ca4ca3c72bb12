#pragma once

#include <stdexcept>
#include <string>

namespace schur {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (scheme files, generator files, CLI specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A search or enumeration ran out of its node or time budget.  Partial
// results are never returned in place of a complete answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) {
    throw PreconditionError(what);
  }
}

}  // namespace schur

#pragma once

#include <stdexcept>
#include <string>

namespace hamcirc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index outside the ambient rank, or mismatched ranks.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (words, moves, specs, edge lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or closure exceeded its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A proved statement failed to hold on a concrete instance; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hamcirc

#pragma once

#include <stdexcept>
#include <string>

namespace ldsets {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something that violates an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed instance text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search asked to run above its configured order cutoff.
class InfeasibleSize : public Error {
 public:
  using Error::Error;
};

// A property guaranteed by the construction did not hold. Signals a bug or
// an input that slipped past the precondition checks.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// No separator with the required structure exists within the search.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// The instance lies outside the algorithm's domain (e.g. nothing supervises it).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The instance violates a solver hypothesis (twins present).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Rejection sampling ran out of retries.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ldsets

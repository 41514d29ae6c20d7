#pragma once

#include <stdexcept>
#include <string>

namespace twistcert {

// Every failure raised by the library derives from Error so that the CLI can
// map categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Working precision too low to represent or decide a quantity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// An enclosure straddles a decision threshold even after the automatic retry.
class UndecidableAtPrecision : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

// A bounded search (subdivision, coset table, generations) ran out of budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class InvalidSignature : public Error {
 public:
  using Error::Error;
};

class InconsistentPresentation : public Error {
 public:
  using Error::Error;
};

class NotASurface : public Error {
 public:
  using Error::Error;
};

class AlgorithmFailure : public Error {
 public:
  using Error::Error;
};

class MismatchError : public Error {
 public:
  using Error::Error;
};

class IncompleteClassList : public Error {
 public:
  using Error::Error;
};

class InconclusiveCertificate : public Error {
 public:
  using Error::Error;
};

// Malformed user input: bad words, unknown presets, unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistcert

#pragma once

#include <stdexcept>
#include <string>

namespace rcheck {

// Root of every failure the toolkit reports. The C API maps each subclass to
// one status code, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside an operation's precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Fixture text did not parse. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A search hit its node cap or a size limit. Never a verdict.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Ledger is malformed (e.g. a rule tag the variant does not define).
class LedgerError : public Error {
 public:
  using Error::Error;
};

// Plane-graph or charge audit found an inconsistency.
class AuditError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcheck

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace peerfee {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data. Carries the source name and 1-based line number
// (line 0 means the problem is not tied to a single line).
class IngestError : public Error {
 public:
  IngestError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// A caller broke an operation's precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The requested quantity does not exist for these inputs (e.g. a zero
// denominator in a settlement-free localization formula).
class UndefinedConditionError : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refuses inputs above its size guard.
class OracleGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace peerfee

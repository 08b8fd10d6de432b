#pragma once

#include <stdexcept>
#include <string>

namespace slipflow {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Caller violated a stated precondition between related inputs
// (mismatched geometries, too few coefficients, sign contracts).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Linear solve or iteration failed.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An exact identity failed; carries the first failing index.
class IdentityViolation : public std::logic_error {
public:
  IdentityViolation(const std::string& identity, long n)
      : std::logic_error(identity + " fails at n=" + std::to_string(n)),
        identity_(identity), n_(n) {}
  const std::string& identity() const { return identity_; }
  long index() const { return n_; }

private:
  std::string identity_;
  long n_;
};

}  // namespace slipflow

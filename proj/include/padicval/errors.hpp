#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padicval {

// Raised when a mathematical precondition fails on otherwise well-formed
// input. Argument errors (bad modulus, zero polynomial where one is not
// allowed, malformed text) use std::invalid_argument instead.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// nu_p(0) is undefined.
class ValuationOfZero : public DomainError {
 public:
  ValuationOfZero() : DomainError("valuation of 0 is undefined") {}
};

class NotARoot : public DomainError {
 public:
  using DomainError::DomainError;
};

// Q'(a) = 0 mod p: the Hensel hypothesis fails at this residue.
class NotSimple : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotHenselPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class DepthExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class HasIntegerRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

// Every coefficient of Q is divisible by p, so every residue is a root.
class ZeroModPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : std::invalid_argument("parse error at offset " + std::to_string(offset) +
                              ": expected " + expected),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace padicval

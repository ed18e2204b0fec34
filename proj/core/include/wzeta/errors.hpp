// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wzeta {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller (bad argument, bad
/// discriminant, parameter outside a series' admissible set).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational function or Pochhammer factor vanished in a denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or continued fraction failed to converge, or an evaluation hit a
/// zero denominator mid-recurrence.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Certificate fitting failed. `underdetermined` distinguishes rank
/// deficiency (raise degree / add points) from an inconsistent system.
class CertificateError : public Error {
 public:
  CertificateError(const std::string& what, bool underdetermined)
      : Error(what), underdetermined_(underdetermined) {}
  bool underdetermined() const noexcept { return underdetermined_; }

 private:
  bool underdetermined_;
};

/// shift_transform could not express F(n,k+n) as a hypergeometric term spec.
class NotRepresentableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace wzeta

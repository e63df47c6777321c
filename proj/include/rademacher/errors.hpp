#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rademacher {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// (p, q) violates 2 <= p < q, gcd(p, q) = 1.
class InvalidContext : public Error {
 public:
  using Error::Error;
};

// Operands built over different cyclotomic contexts.
class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("operands belong to different (p, q) contexts") {}
};

// Coefficient vector is not fixed by complex conjugation.
class NotReal : public Error {
 public:
  using Error::Error;
};

// Matrix entries do not satisfy ad - bc = 1.
class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// matrix_to_word exhausted its syllable budget.
class NotFound : public Error {
 public:
  using Error::Error;
};

// Word cannot be brought to a cyclic S...U alternating form.
class NotCyclicallyAlternating : public Error {
 public:
  using Error::Error;
};

// A value that must be an integer is not. Indicates an implementation bug.
class NonIntegral : public Error {
 public:
  using Error::Error;
};

}  // namespace rademacher

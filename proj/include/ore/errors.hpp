#pragma once

#include <stdexcept>
#include <string>

namespace ore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands from different rings/fields, malformed descriptors, bad indices.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("inverse of zero") {}
};

// Raised by exact division when no exact cofactor exists.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ResampleExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation undefined on the given value (e.g. grading of the zero polynomial).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ore

#pragma once

#include <stdexcept>
#include <string>

namespace aschar {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes (input errors -> 2, infeasible enumerations -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in F_q") {}
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class ZeroInversion : public Error {
 public:
  ZeroInversion() : Error("series is zero to its precision") {}
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

class ZeroCharacter : public Error {
 public:
  ZeroCharacter() : Error("character is trivial (zero coset)") {}
};

class ZeroCoset : public Error {
 public:
  ZeroCoset() : Error("coset representative is zero") {}
};

class InfeasibleEnumeration : public Error {
 public:
  using Error::Error;
};

class InvalidRamificationDepth : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace aschar

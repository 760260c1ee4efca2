#pragma once

#include <stdexcept>
#include <string>

namespace skewalex {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class FieldMismatch : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

class ShapeError : public Error {
public:
  using Error::Error;
};

class RankDeficient : public Error {
public:
  using Error::Error;
};

class OddBlockSingular : public Error {
public:
  using Error::Error;
};

class TauChainNotFound : public Error {
public:
  using Error::Error;
};

class RelatorViolation : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

class PhiMismatch : public Error {
public:
  using Error::Error;
};

class BoundaryCheckFailed : public Error {
public:
  using Error::Error;
};

class DiagramDoesNotCommute : public Error {
public:
  using Error::Error;
};

class SkewEqualityUndecidable : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

/// Raised when a mathematically guaranteed cross-check fails; always a bug.
class InternalInvariantError : public Error {
public:
  using Error::Error;
};

}  // namespace skewalex

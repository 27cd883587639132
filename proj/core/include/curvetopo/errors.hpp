#pragma once

#include <stdexcept>
#include <string>

namespace curvetopo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidTolerances : public Error {
 public:
  using Error::Error;
};

class InvalidCurve : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class MalformedDiagram : public Error {
 public:
  using Error::Error;
};

class OnCrossing : public Error {
 public:
  using Error::Error;
};

class PointOnCurve : public Error {
 public:
  using Error::Error;
};

class NonIntegerWinding : public Error {
 public:
  using Error::Error;
};

class RayRetryExhausted : public Error {
 public:
  using Error::Error;
};

class InconsistentLabeling : public Error {
 public:
  using Error::Error;
};

class CornerPatternViolation : public Error {
 public:
  using Error::Error;
};

class CuspDetected : public Error {
 public:
  using Error::Error;
};

class NonIntegerTurning : public Error {
 public:
  using Error::Error;
};

class InvalidSite : public Error {
 public:
  using Error::Error;
};

class DisconnectingMove : public Error {
 public:
  using Error::Error;
};

class GenerationExhausted : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Malformed curve file, diagram dump or move script.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvetopo

#pragma once

#include <stdexcept>
#include <string>

namespace bbk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

class MixedRings : public Error {
 public:
  explicit MixedRings(const std::string& msg) : Error(msg) {}
};

class UnsupportedRing : public Error {
 public:
  explicit UnsupportedRing(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class NotInBorder : public Error {
 public:
  explicit NotInBorder(const std::string& msg) : Error(msg) {}
};

/// A requested degree exceeds the tails stored in a prebasis.
class InsufficientPrebasisDegree : public Error {
 public:
  explicit InsufficientPrebasisDegree(const std::string& msg) : Error(msg) {}
};

/// The capped scan for the stabilization degree t ran out of budget.
class ScanCapExceeded : public Error {
 public:
  explicit ScanCapExceeded(const std::string& msg) : Error(msg) {}
};

/// A condition that is a theorem for certified inputs failed; signals a bug
/// or an uncertified input smuggled past a precondition.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

class StepLimitExceeded : public Error {
 public:
  explicit StepLimitExceeded(const std::string& msg) : Error(msg) {}
};

class Overflow : public Error {
 public:
  explicit Overflow(const std::string& msg) : Error(msg) {}
};

}  // namespace bbk

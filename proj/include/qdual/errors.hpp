#pragma once

#include <stdexcept>
#include <string>

namespace qdual {

// Error taxonomy for the whole engine. Everything derives from EngineError so
// the CLI can map math-domain failures to a single exit code.

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidType : EngineError {
  explicit InvalidType(const std::string& m) : EngineError("InvalidType: " + m) {}
};

struct DimensionMismatch : EngineError {
  explicit DimensionMismatch(const std::string& m) : EngineError("DimensionMismatch: " + m) {}
};

struct IndexOutOfRange : EngineError {
  explicit IndexOutOfRange(const std::string& m) : EngineError("IndexOutOfRange: " + m) {}
};

struct OrbitTooLarge : EngineError {
  explicit OrbitTooLarge(const std::string& m) : EngineError("OrbitTooLarge: " + m) {}
};

struct NotDominant : EngineError {
  explicit NotDominant(const std::string& m) : EngineError("NotDominant: " + m) {}
};

struct WrongType : EngineError {
  explicit WrongType(const std::string& m) : EngineError("WrongType: " + m) {}
};

struct NonIntegralDifference : EngineError {
  explicit NonIntegralDifference(const std::string& m)
      : EngineError("NonIntegralDifference: " + m) {}
};

struct InvalidQ : EngineError {
  explicit InvalidQ(const std::string& m) : EngineError("InvalidQ: " + m) {}
};

struct PoleInDenominator : EngineError {
  explicit PoleInDenominator(const std::string& m) : EngineError("PoleInDenominator: " + m) {}
};

struct NotReduced : EngineError {
  explicit NotReduced(const std::string& m) : EngineError("NotReduced: " + m) {}
};

struct PoleOnPath : EngineError {
  explicit PoleOnPath(const std::string& m) : EngineError("PoleOnPath: " + m) {}
};

// Raised when an operation's stated precondition is violated in a way that is
// detectable cheaply (e.g. a scan on a parameter that is not almost real).
struct DomainError : EngineError {
  explicit DomainError(const std::string& m) : EngineError("DomainError: " + m) {}
};

}  // namespace qdual

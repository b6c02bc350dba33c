#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace qfi {

// Domain error kinds. The names double as the machine-readable "kind"
// strings in CLI error objects, so they stay stable.
enum class ErrorKind {
  SyntaxError,
  NonSquarefree,
  IndexOutOfRange,
  EmptyGenerators,
  UnsupportedVarCount,
  DimensionMismatch,
  NotEquigenerated,
  DegreeTooSmall,
  NotFullSupport,
  MixedDegrees,
  FullGeneratorDegree,
  TooLarge,
  RTooLarge,
  SpecTooLarge,
  SymmetryCapExceeded,
};

const char* to_string(ErrorKind kind);

// Carries a kind plus structured witnesses (positions, dimensions,
// missing monomials, ...) so callers can report errors without parsing
// the message text.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message,
              nlohmann::ordered_json details = nlohmann::ordered_json::object())
      : std::runtime_error(message), kind_(kind), details_(std::move(details)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::ordered_json& details() const { return details_; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind_);
    j["message"] = what();
    if (!details_.empty()) j["details"] = details_;
    return j;
  }

 private:
  ErrorKind kind_;
  nlohmann::ordered_json details_;
};

}  // namespace qfi

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mrsk {

// Domain error with a stable machine-readable kind. Kind strings are part of
// the CLI contract (they appear verbatim in JSON error reports).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

namespace errkind {
inline constexpr const char* NegativeJump = "NegativeJump";
inline constexpr const char* UnsortedBreakpoints = "UnsortedBreakpoints";
inline constexpr const char* HorizonMismatch = "HorizonMismatch";
inline constexpr const char* DimensionMismatch = "DimensionMismatch";
inline constexpr const char* OutOfHorizon = "OutOfHorizon";
inline constexpr const char* OutOfRange = "OutOfRange";
inline constexpr const char* NotDisjoint = "NotDisjoint";
inline constexpr const char* NoPathExists = "NoPathExists";
inline constexpr const char* BadOrdering = "BadOrdering";
inline constexpr const char* IndexOutOfRange = "IndexOutOfRange";
inline constexpr const char* NoStabilization = "NoStabilization";
inline constexpr const char* InvalidGT = "InvalidGT";
inline constexpr const char* InvariantViolation = "InvariantViolation";
inline constexpr const char* NonIntegerEntries = "NonIntegerEntries";
inline constexpr const char* NotBinary = "NotBinary";
inline constexpr const char* BadDrift = "BadDrift";
inline constexpr const char* BadEndpoint = "BadEndpoint";
inline constexpr const char* StateSpaceTooLarge = "StateSpaceTooLarge";
inline constexpr const char* DriftMismatch = "DriftMismatch";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* IoError = "IoError";
inline constexpr const char* ConfigError = "ConfigError";
}  // namespace errkind

[[noreturn]] inline void fail(const char* kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace mrsk

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphforge {

enum class ErrorCode {
  kInvalidParams,
  kInfeasibleParams,
  kGenerationFailed,
  kDegenerateSequence,
  kDegenerateGraph,
  kDegenerateSample,
  kInfeasibleSplit,
  kUndefinedAuc,
  kInvalidQuery,
  kFormatError,
  kIoError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kDegenerateSequence: return "DegenerateSequence";
    case ErrorCode::kDegenerateGraph: return "DegenerateGraph";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kInfeasibleSplit: return "InfeasibleSplit";
    case ErrorCode::kUndefinedAuc: return "UndefinedAuc";
    case ErrorCode::kInvalidQuery: return "InvalidQuery";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

inline std::optional<ErrorCode> parse_error_code(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kIoError); ++i) {
    if (to_string(static_cast<ErrorCode>(i)) == name) return static_cast<ErrorCode>(i);
  }
  return std::nullopt;
}

// Every failure the library reports carries one of the codes above so that
// callers (the sweep harness, the CLI) can map it to a status or exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphforge

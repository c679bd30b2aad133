#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdiff {

enum class ErrorCode {
  MalformedLine,
  SelfLoop,
  DuplicateEdge,
  IndexOutOfRange,
  LengthMismatch,
  InvalidArgument,
  PeriodNotFound,
  InternalInconsistency,
  IllegalOrientation,
  IllegalLocalPattern,
  NotAnAgreeingPair,
  CeilingExceeded,
  WindowNotStabilized,
  Overflow,
  FileError,
};

/// Stable kebab-case name, used in CLI diagnostics and JSON reports.
std::string_view to_string(ErrorCode code) noexcept;

/// True for errors that signal a resource guard rather than bad input.
bool is_resource_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pdiff

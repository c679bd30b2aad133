#include "pdiff/error.hpp"

namespace pdiff {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedLine: return "malformed-line";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::LengthMismatch: return "length-mismatch";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::PeriodNotFound: return "period-not-found";
    case ErrorCode::InternalInconsistency: return "internal-inconsistency";
    case ErrorCode::IllegalOrientation: return "illegal-orientation";
    case ErrorCode::IllegalLocalPattern: return "illegal-local-pattern";
    case ErrorCode::NotAnAgreeingPair: return "not-an-agreeing-pair";
    case ErrorCode::CeilingExceeded: return "ceiling-exceeded";
    case ErrorCode::WindowNotStabilized: return "window-not-stabilized";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::FileError: return "file-error";
  }
  return "unknown";
}

bool is_resource_error(ErrorCode code) noexcept {
  return code == ErrorCode::CeilingExceeded || code == ErrorCode::WindowNotStabilized ||
         code == ErrorCode::PeriodNotFound;
}

}  // namespace pdiff

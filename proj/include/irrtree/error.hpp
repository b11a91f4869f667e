#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace irrtree {

enum class ErrorCode {
  SelfLoop,
  VertexOutOfRange,
  LengthMismatch,
  NotATree,
  DomainError,
  CapExceeded,
  NotRealizable,
  SpecInvalid,
  OrderTooSmall,
  NoValidSpec,
  UnknownClaim,
  OutOfScopeClaim,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NoValidSpec: return "NoValidSpec";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::OutOfScopeClaim: return "OutOfScopeClaim";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace irrtree
